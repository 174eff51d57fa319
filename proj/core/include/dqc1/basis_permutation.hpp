#pragma once
// Permutations of n-bit basis strings, stored sparsely (moved strings
// only). Qubit 1 is the most significant bit of the n-bit index.

#include <cstdint>
#include <map>

#include "dqc1/perm5.hpp"

namespace dqc1 {

class BasisPermutation {
 public:
  // Identity on n bits, 1 <= n <= 62.
  explicit BasisPermutation(unsigned n);

  // `moved` maps each relocated string to its image. Keys and values must
  // form the same set (a permutation's support is closed), all below 2^n.
  // Fixed points in the map are dropped.
  BasisPermutation(unsigned n, std::map<std::uint64_t, std::uint64_t> moved);

  // Embeds a permutation of {1..5} on the top-3-bit prefixes 000..100,
  // acting on every suffix alike; prefixes 101..111 stay fixed.
  // Requires 3 <= n <= 24 (the sparse table has 5 * 2^(n-3) entries).
  static BasisPermutation from_five_states(const Perm5& p, unsigned n);

  [[nodiscard]] unsigned num_bits() const { return n_; }
  [[nodiscard]] std::uint64_t operator()(std::uint64_t x) const;
  [[nodiscard]] BasisPermutation inverse() const;
  [[nodiscard]] const std::map<std::uint64_t, std::uint64_t>& moved() const { return moved_; }

  friend bool operator==(const BasisPermutation&, const BasisPermutation&) = default;

 private:
  unsigned n_;
  std::map<std::uint64_t, std::uint64_t> moved_;
};

}  // namespace dqc1
