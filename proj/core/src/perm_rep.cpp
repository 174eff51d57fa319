#include "dqc1/perm_rep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace dqc1 {

PermRepInstance build_perm_rep_instance(unsigned M, PermRepVariant variant) {
  if (M < 2 || M > 12) throw std::invalid_argument("instance needs 2 <= M <= 12");
  PermRepInstance inst;
  inst.M = M;
  inst.variant = variant;
  inst.subspaces.reserve(M);
  const std::uint32_t full = (std::uint32_t{1} << M) - 1;
  for (unsigned i = 0; i < M; ++i) {
    const std::uint32_t axis = std::uint32_t{1} << i;
    inst.subspaces.push_back(variant == PermRepVariant::coordinate ? axis : full ^ axis);
  }
  return inst;
}

std::uint32_t apply_adjacent_transposition(std::uint32_t mask, unsigned i) {
  const std::uint32_t lo = (mask >> i) & 1u;
  const std::uint32_t hi = (mask >> (i + 1)) & 1u;
  if (lo != hi) mask ^= (std::uint32_t{3} << i);
  return mask;
}

namespace {

bool in_family(const PermRepInstance& inst, std::uint32_t mask) {
  return std::find(inst.subspaces.begin(), inst.subspaces.end(), mask) != inst.subspaces.end();
}

}  // namespace

bool generators_preserve_family(const PermRepInstance& inst) {
  for (unsigned i = 0; i + 1 < inst.M; ++i) {
    for (std::uint32_t mask : inst.subspaces) {
      if (!in_family(inst, apply_adjacent_transposition(mask, i))) return false;
    }
  }
  return true;
}

bool generator_relations_hold_on_family(const PermRepInstance& inst) {
  const unsigned gens = inst.M - 1;
  for (std::uint32_t mask : inst.subspaces) {
    for (unsigned i = 0; i < gens; ++i) {
      const std::uint32_t once = apply_adjacent_transposition(mask, i);
      if (apply_adjacent_transposition(once, i) != mask) return false;
    }
    for (unsigned i = 0; i + 1 < gens; ++i) {
      std::uint32_t m = mask;
      for (int round = 0; round < 3; ++round) {
        m = apply_adjacent_transposition(m, i);
        m = apply_adjacent_transposition(m, i + 1);
      }
      if (m != mask) return false;
    }
    for (unsigned i = 0; i < gens; ++i) {
      for (unsigned j = i + 2; j < gens; ++j) {
        const std::uint32_t ij =
            apply_adjacent_transposition(apply_adjacent_transposition(mask, i), j);
        const std::uint32_t ji =
            apply_adjacent_transposition(apply_adjacent_transposition(mask, j), i);
        if (ij != ji) return false;
      }
    }
  }
  return true;
}

BoundDifferenceReport check_bound_difference(const PermRepInstance& inst, const Rational& c) {
  if (c <= 0) throw std::invalid_argument("the constant c must be positive");
  BoundDifferenceReport report;
  report.M = inst.M;
  report.variant = inst.variant;
  report.c = c;
  report.label = perm_rep_variant_name(inst.variant) + "(M=" + std::to_string(inst.M) +
                 ",c=" + format_rational(c) + ")";

  const unsigned N = inst.M;  // one subspace per coordinate
  const BigNat p = boost::multiprecision::numerator(c);
  const BigNat q = boost::multiprecision::denominator(c);
  const BigNat rhs_exp = BigNat(2) * p * N;
  const BigNat lhs_exp_unit = q * inst.M;  // per unit of lhs
  if (rhs_exp > 1000000 || lhs_exp_unit * inst.M > 1000000) {
    throw std::invalid_argument("constant c too large to compare exactly");
  }
  // lhs <= (2c lg N / M) N  <=>  q M lhs <= 2 p N lg N  <=>
  // 2^(q M lhs) <= N^(2 p N). Both sides stay exact integers.
  const BigNat rhs_power = pow_nat(BigNat(N), rhs_exp.convert_to<unsigned>());
  const double rhs_display =
      2.0 * c.convert_to<double>() * std::log2(static_cast<double>(N)) / inst.M * N;

  for (unsigned i = 0; i < inst.M; ++i) {
    for (unsigned j = 0; j < inst.M; ++j) {
      if (i == j) continue;
      const std::uint32_t xi = inst.subspaces[i];
      const std::uint32_t xj = inst.subspaces[j];
      const unsigned lhs =
          static_cast<unsigned>(std::popcount(xi)) - static_cast<unsigned>(std::popcount(xi & xj));
      const BigNat lhs_power = pow_nat(BigNat(2), (lhs_exp_unit * lhs).convert_to<unsigned>());
      PairBoundCheck check;
      check.i = i;
      check.j = j;
      check.lhs = lhs;
      check.rhs = rhs_display;
      check.holds = lhs_power <= rhs_power;
      ++report.pair_count;
      if (!check.holds) ++report.violations;
      report.pairs.push_back(check);
    }
  }
  return report;
}

std::string perm_rep_variant_name(PermRepVariant variant) {
  return variant == PermRepVariant::coordinate ? "coordinate" : "complement";
}

}  // namespace dqc1
