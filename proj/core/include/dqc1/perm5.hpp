#pragma once
// Permutations of {1..5}. Composition reads left to right: (a * b) means
// "a, then b", so a program evaluates as the plain fold of its
// instructions. Inverses and conjugation follow that convention.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace dqc1 {

class Perm5 {
 public:
  Perm5() : img_{1, 2, 3, 4, 5} {}

  // Validates that images are a permutation of 1..5.
  static Perm5 from_images(const std::array<std::uint8_t, 5>& images);

  // cycle({1,3,5}) maps 1->3, 3->5, 5->1 and fixes the rest.
  static Perm5 cycle(std::initializer_list<std::uint8_t> points);

  [[nodiscard]] std::uint8_t operator()(std::uint8_t x) const { return img_[x - 1]; }
  [[nodiscard]] const std::array<std::uint8_t, 5>& images() const { return img_; }

  [[nodiscard]] Perm5 operator*(const Perm5& then) const;
  [[nodiscard]] Perm5 inverse() const;

  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] bool is_five_cycle() const;
  [[nodiscard]] bool is_even() const;

  [[nodiscard]] std::string to_string() const;  // cycle notation, "()" for identity

  friend bool operator==(const Perm5&, const Perm5&) = default;
  friend auto operator<=>(const Perm5&, const Perm5&) = default;

 private:
  std::array<std::uint8_t, 5> img_;
};

}  // namespace dqc1
