#pragma once
// Concrete subspace families inside R^M carried by the coordinate action
// of S_M, together with an exact check of the pairwise dimension-drop
// bound dim X - dim(X ^ Y) <= (2c lg N / M) N with N = M.
//
// Subspaces are spans of coordinate axes, stored as M-bit masks:
//   coordinate: X_i = span(e_i)
//   complement: X_i = span(e_j : j != i)

#include <cstdint>
#include <string>
#include <vector>

#include "dqc1/numeric.hpp"

namespace dqc1 {

enum class PermRepVariant { coordinate, complement };

struct PermRepInstance {
  unsigned M = 0;  // ambient dimension and subspace count alike
  PermRepVariant variant = PermRepVariant::coordinate;
  std::vector<std::uint32_t> subspaces;  // axis masks, one per index
};

// 2 <= M <= 12 keeps every scan exhaustive.
[[nodiscard]] PermRepInstance build_perm_rep_instance(unsigned M, PermRepVariant variant);

// Action of the adjacent transposition (i i+1) on an axis mask, 0-based i.
[[nodiscard]] std::uint32_t apply_adjacent_transposition(std::uint32_t mask, unsigned i);

// Every generator maps the family onto itself (as a set of masks).
[[nodiscard]] bool generators_preserve_family(const PermRepInstance& inst);

// s_i^2 = id, (s_i s_{i+1})^3 = id, and s_i s_j = s_j s_i for |i-j| >= 2,
// verified as actions on the family's masks.
[[nodiscard]] bool generator_relations_hold_on_family(const PermRepInstance& inst);

struct PairBoundCheck {
  unsigned i = 0;  // ordered pair of member indices
  unsigned j = 0;
  unsigned lhs = 0;  // dim X_i - dim(X_i ^ X_j), exact
  double rhs = 0.0;  // (2c lg N / M) N, display only
  bool holds = false;
};

struct BoundDifferenceReport {
  std::string label;
  unsigned M = 0;
  PermRepVariant variant = PermRepVariant::coordinate;
  Rational c{1};
  std::uint64_t pair_count = 0;
  std::uint64_t violations = 0;
  std::vector<PairBoundCheck> pairs;
};

// Checks every ordered pair i != j. The comparison is exact: with c = p/q,
//   lhs <= (2c lg N / M) N  <=>  2^(q M lhs) <= N^(2 p N).
[[nodiscard]] BoundDifferenceReport check_bound_difference(const PermRepInstance& inst,
                                                           const Rational& c);

[[nodiscard]] std::string perm_rep_variant_name(PermRepVariant variant);

}  // namespace dqc1
