#pragma once
// Integer partitions as Young diagrams, plus the exact hook length
// machinery for symmetric group irrep dimensions.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dqc1/numeric.hpp"

namespace dqc1 {

// 1-based diagram coordinates: row i counts from the top, column j from the left.
struct Cell {
  unsigned row = 0;
  unsigned col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Weakly decreasing positive parts. The empty partition is legal and
// denotes the unique shape of weight 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts);

  // "[4,4,2,1]"; "[]" is the empty shape. Throws std::invalid_argument.
  static Partition parse(const std::string& text);

  [[nodiscard]] const std::vector<unsigned>& parts() const { return parts_; }
  [[nodiscard]] unsigned rows() const { return static_cast<unsigned>(parts_.size()); }
  [[nodiscard]] unsigned weight() const;

  // 1-based row length; rows past the last are 0.
  [[nodiscard]] unsigned part(unsigned i) const;

  [[nodiscard]] Partition conjugate() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
};

// Hook length of cell (i,j) = arm + leg + 1. Row-major: result[i-1][j-1].
[[nodiscard]] std::vector<std::vector<unsigned>> hook_lengths(const Partition& shape);

[[nodiscard]] BigNat hook_product(const Partition& shape);

// weight! / hook product. The division is exact; a remainder is an
// internal error and throws std::logic_error.
[[nodiscard]] BigNat irrep_dimension(const Partition& shape);

// Cells (i, shape_i) with shape_i > shape_{i+1}: the removable boxes,
// listed top to bottom.
[[nodiscard]] std::vector<Cell> inside_corners(const Partition& shape);

// Shapes obtained by deleting one inside corner each, in corner order.
// Requires weight >= 1.
[[nodiscard]] std::vector<Partition> restrictions(const Partition& shape);

// Streams the partitions of m in reverse-lexicographic order:
// (m) first, (1,...,1) last. m == 0 yields just the empty shape.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(unsigned m);
  std::optional<Partition> next();

 private:
  unsigned m_;
  bool emitted_first_ = false;
  bool done_ = false;
  std::vector<unsigned> current_;
};

[[nodiscard]] std::vector<Partition> partitions_of(unsigned m);

}  // namespace dqc1
