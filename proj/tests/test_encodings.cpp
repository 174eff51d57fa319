#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "dqc1/perm_rep.hpp"
#include "dqc1/subspace_family.hpp"

using namespace dqc1;

namespace {

// All invertible 3x3 matrices over GF(2), rows as masks. 168 of them.
std::vector<std::array<std::uint32_t, 3>> gl3_elements() {
  std::vector<std::array<std::uint32_t, 3>> out;
  for (std::uint32_t packed = 0; packed < 512; ++packed) {
    const std::array<std::uint32_t, 3> m{packed & 7, (packed >> 3) & 7, (packed >> 6) & 7};
    // Invertible iff the rows are linearly independent: all non-empty row
    // subsets XOR to nonzero.
    bool ok = true;
    for (unsigned subset = 1; subset < 8 && ok; ++subset) {
      std::uint32_t x = 0;
      for (unsigned r = 0; r < 3; ++r) {
        if ((subset >> r) & 1) x ^= m[r];
      }
      if (x == 0) ok = false;
    }
    if (ok) out.push_back(m);
  }
  return out;
}

std::uint32_t apply3(const std::array<std::uint32_t, 3>& m, std::uint32_t x) {
  std::uint32_t y = 0;
  for (unsigned r = 0; r < 3; ++r) y |= static_cast<std::uint32_t>(std::popcount(m[r] & x) & 1) << r;
  return y;
}

std::array<std::uint32_t, 3> transpose3(const std::array<std::uint32_t, 3>& m) {
  std::array<std::uint32_t, 3> t{0, 0, 0};
  for (unsigned r = 0; r < 3; ++r) {
    for (unsigned c = 0; c < 3; ++c) {
      if ((m[r] >> c) & 1) t[c] |= 1u << r;
    }
  }
  return t;
}

std::array<std::uint32_t, 3> invert3(const std::array<std::uint32_t, 3>& m) {
  // Tiny enough for search: the inverse is the unique g with g(m(x)) = x.
  for (const auto& g : gl3_elements()) {
    bool ok = true;
    for (std::uint32_t x = 0; x < 8 && ok; ++x) ok = apply3(g, apply3(m, x)) == x;
    if (ok) return g;
  }
  throw std::logic_error("matrix was not invertible");
}

}  // namespace

TEST_CASE("family construction and membership") {
  const auto parity3 = SubspaceFamily::parity(3);
  CHECK(parity3.index_count() == 7);
  CHECK(parity3.member_size(0b100) == 4);
  CHECK(parity3.member_elements(0b100) ==
        std::vector<std::uint64_t>{0b000, 0b001, 0b010, 0b011});

  const auto pointed3 = SubspaceFamily::pointed(3);
  CHECK(pointed3.index_count() == 4);
  CHECK(pointed3.member_size(0b01) == 5);
  CHECK(pointed3.member_elements(0b01) ==
        std::vector<std::uint64_t>{0b000, 0b001, 0b010, 0b011, 0b101});

  const auto parity2 = SubspaceFamily::parity(2);
  for (std::uint64_t pos = 0; pos < parity2.index_count(); ++pos) {
    CHECK(parity2.member_size(parity2.index_at(pos)) == 2);
  }

  CHECK_THROWS_AS((void)SubspaceFamily::parity(1), std::invalid_argument);
  CHECK_THROWS_AS((void)SubspaceFamily::pointed(21), std::invalid_argument);
  CHECK_THROWS_AS((void)parity3.contains(0, 0), std::invalid_argument);  // b=0 excluded
  CHECK_THROWS_AS((void)parity3.contains(0b100, 0b1000), std::invalid_argument);
}

TEST_CASE("intersection worked values") {
  const auto parity3 = SubspaceFamily::parity(3);
  CHECK(intersection_size(parity3, 0b100, 0b010) == 2);
  const auto parity2 = SubspaceFamily::parity(2);
  CHECK(intersection_size(parity2, 0b10, 0b01) == 1);
  const auto pointed3 = SubspaceFamily::pointed(3);
  CHECK(intersection_size(pointed3, 0b00, 0b01) == 4);
  CHECK(intersection_size(pointed3, 0b10, 0b11) == 4);
  CHECK_THROWS_AS((void)intersection_size(parity3, 0b100, 0b100), std::invalid_argument);
}

TEST_CASE("closed forms match enumeration everywhere small") {
  for (unsigned n = 2; n <= 8; ++n) {
    for (const auto* kind : {"parity", "pointed"}) {
      const auto family =
          kind == std::string("parity") ? SubspaceFamily::parity(n) : SubspaceFamily::pointed(n);
      const auto count = family.index_count();
      for (std::uint64_t p = 0; p < count; ++p) {
        for (std::uint64_t q = p + 1; q < count; ++q) {
          const auto b1 = family.index_at(p);
          const auto b2 = family.index_at(q);
          REQUIRE(intersection_size(family, b1, b2) ==
                  intersection_size_enumerated(family, b1, b2));
        }
      }
    }
  }
}

TEST_CASE("overlap statistics") {
  const auto parity = overlap_stats(SubspaceFamily::parity(6));
  CHECK(parity.max_ratio == Rational(1, 2));
  CHECK(parity.min_ratio == Rational(1, 2));
  CHECK(parity.pair_count == 63 * 62 / 2);
  REQUIRE(parity.intersection_histogram.size() == 1);
  CHECK(parity.intersection_histogram.begin()->first == 16);

  const auto pointed = overlap_stats(SubspaceFamily::pointed(6));
  CHECK(pointed.max_ratio == Rational(32, 33));
  CHECK(pointed.pair_count == 32 * 31 / 2);

  for (unsigned n = 3; n <= 9; ++n) {
    const auto stats = overlap_stats(SubspaceFamily::pointed(n));
    const BigNat half = BigNat(1) << (n - 1);
    CHECK(stats.max_ratio == Rational(half, half + 1));
  }
  // The pointed ratio climbs towards 1 as n grows.
  CHECK(overlap_stats(SubspaceFamily::pointed(4)).max_ratio <
        overlap_stats(SubspaceFamily::pointed(5)).max_ratio);

  const auto lonely = overlap_stats(
      SubspaceFamily::explicit_sets(3, {{0b000, 0b001}}));
  CHECK(lonely.pair_count == 0);
  CHECK(lonely.intersection_histogram.empty());
}

TEST_CASE("explicit families enumerate") {
  const auto f = SubspaceFamily::explicit_sets(3, {{0, 1, 2}, {1, 2, 3}, {5}});
  CHECK(f.index_count() == 3);
  CHECK(f.member_size(0) == 3);
  CHECK(intersection_size(f, 0, 1) == 2);
  CHECK(intersection_size(f, 0, 2) == 0);
  CHECK(f.contains(2, 5));
  CHECK(!f.contains(2, 4));
  CHECK_THROWS_AS((void)SubspaceFamily::explicit_sets(2, {{9}}), std::invalid_argument);
}

TEST_CASE("pointed witnesses exist for every index permutation") {
  std::mt19937_64 rng(42);
  for (unsigned n : {4u, 6u, 8u}) {
    const auto family = SubspaceFamily::pointed(n);
    const auto count = family.index_count();
    std::vector<std::uint64_t> pi(count);
    for (std::uint64_t p = 0; p < count; ++p) pi[p] = p;
    for (int trial = 0; trial < 100; ++trial) {
      std::shuffle(pi.begin(), pi.end(), rng);
      const auto result = permutability_witness(family, pi);
      REQUIRE(result.status == WitnessStatus::found);
      REQUIRE(result.witness.has_value());
      REQUIRE(witness_carries_family(family, pi, *result.witness));
    }
  }
}

TEST_CASE("identity permutation gets the identity witness") {
  for (const auto& family : {SubspaceFamily::pointed(5), SubspaceFamily::parity(3)}) {
    std::vector<std::uint64_t> pi(family.index_count());
    for (std::uint64_t p = 0; p < pi.size(); ++p) pi[p] = p;
    const auto result = permutability_witness(family, pi);
    REQUIRE(result.status == WitnessStatus::found);
    CHECK(result.witness->moved().empty());
    CHECK(witness_carries_family(family, pi, *result.witness));
  }
}

TEST_CASE("parity witnesses exist exactly for linear index maps at n=3") {
  const auto family = SubspaceFamily::parity(3);
  const auto gl = gl3_elements();
  REQUIRE(gl.size() == 168);

  // A substitution x -> Mx carries member(b) to member((M^T)^{-1} b):
  // collect the index permutation of each group element as the oracle set.
  std::set<std::vector<std::uint64_t>> linear_maps;
  for (const auto& m : gl) {
    const auto index_map = transpose3(invert3(m));
    std::vector<std::uint64_t> pi(7);
    for (std::uint32_t b = 1; b < 8; ++b) pi[b - 1] = apply3(index_map, b) - 1;
    linear_maps.insert(pi);
  }
  CHECK(linear_maps.size() == 168);  // the action on indices is faithful

  std::mt19937_64 rng(7);
  std::vector<std::vector<std::uint64_t>> sample(linear_maps.begin(), linear_maps.end());
  std::shuffle(sample.begin(), sample.end(), rng);
  sample.resize(24);
  for (const auto& pi : sample) {
    const auto result = permutability_witness(family, pi);
    REQUIRE(result.status == WitnessStatus::found);
    REQUIRE(witness_carries_family(family, pi, *result.witness));
  }

  // Random non-linear maps must come back "none" at this size.
  std::vector<std::uint64_t> pi(7);
  for (std::uint64_t p = 0; p < 7; ++p) pi[p] = p;
  int nonlinear_checked = 0;
  while (nonlinear_checked < 12) {
    std::shuffle(pi.begin(), pi.end(), rng);
    if (linear_maps.count(pi)) continue;
    const auto result = permutability_witness(family, pi);
    REQUIRE(result.status == WitnessStatus::none);
    CHECK(!result.witness.has_value());
    ++nonlinear_checked;
  }
}

TEST_CASE("parity witness reconstruction beyond the exhaustive range") {
  // Bit swap x1 <-> x2 induces the same swap on indices; self-transpose,
  // so the index map equals the substitution map.
  const unsigned n = 6;
  const auto family = SubspaceFamily::parity(n);
  auto swap_bits = [&](std::uint64_t b) {
    const std::uint64_t b0 = (b >> 0) & 1, b1 = (b >> 1) & 1;
    return (b & ~std::uint64_t{3}) | (b0 << 1) | b1;
  };
  std::vector<std::uint64_t> pi(family.index_count());
  for (std::uint64_t p = 0; p < pi.size(); ++p) pi[p] = swap_bits(p + 1) - 1;
  const auto found = permutability_witness(family, pi);
  REQUIRE(found.status == WitnessStatus::found);
  CHECK(witness_carries_family(family, pi, *found.witness));

  // A transposition of two non-basis indices is not linear; at this size
  // the search gives up rather than claiming absence.
  std::vector<std::uint64_t> swap_two(family.index_count());
  for (std::uint64_t p = 0; p < swap_two.size(); ++p) swap_two[p] = p;
  std::swap(swap_two[3 - 1], swap_two[5 - 1]);
  const auto undecided = permutability_witness(family, swap_two);
  CHECK(undecided.status == WitnessStatus::undecided);
}

TEST_CASE("subspace instances and the pairwise dimension bound") {
  const auto coord5 = build_perm_rep_instance(5, PermRepVariant::coordinate);
  REQUIRE(coord5.subspaces.size() == 5);
  for (auto mask : coord5.subspaces) CHECK(std::popcount(mask) == 1);

  const auto comp5 = build_perm_rep_instance(5, PermRepVariant::complement);
  for (auto mask : comp5.subspaces) CHECK(std::popcount(mask) == 4);
  for (unsigned i = 0; i < 5; ++i) {
    for (unsigned j = i + 1; j < 5; ++j) {
      CHECK(std::popcount(comp5.subspaces[i] & comp5.subspaces[j]) == 3);
    }
  }

  CHECK_THROWS_AS((void)build_perm_rep_instance(1, PermRepVariant::coordinate),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)build_perm_rep_instance(13, PermRepVariant::coordinate),
                  std::invalid_argument);

  for (unsigned m = 2; m <= 12; ++m) {
    for (auto variant : {PermRepVariant::coordinate, PermRepVariant::complement}) {
      const auto inst = build_perm_rep_instance(m, variant);
      CHECK(generators_preserve_family(inst));
      CHECK(generator_relations_hold_on_family(inst));
      const auto report = check_bound_difference(inst, Rational(1));
      CHECK(report.violations == 0);
      CHECK(report.pair_count == std::uint64_t{m} * (m - 1));
    }
  }
}

TEST_CASE("bound check worked examples") {
  const auto comp8 = check_bound_difference(
      build_perm_rep_instance(8, PermRepVariant::complement), Rational(1));
  REQUIRE(!comp8.pairs.empty());
  for (const auto& pair : comp8.pairs) {
    CHECK(pair.lhs == 1);
    CHECK(pair.rhs == doctest::Approx(6.0));
    CHECK(pair.holds);
  }

  const auto coord2 = check_bound_difference(
      build_perm_rep_instance(2, PermRepVariant::coordinate), Rational(1));
  REQUIRE(coord2.pairs.size() == 2);
  CHECK(coord2.pairs[0].lhs == 1);
  CHECK(coord2.pairs[0].rhs == doctest::Approx(2.0));
  CHECK(coord2.violations == 0);

  // Exact boundary: at M=2 the pair inequality 1 <= 2c flips at c = 1/2.
  CHECK(check_bound_difference(build_perm_rep_instance(2, PermRepVariant::coordinate),
                               Rational(1, 2))
            .violations == 0);
  CHECK(check_bound_difference(build_perm_rep_instance(2, PermRepVariant::coordinate),
                               Rational(49, 100))
            .violations == 2);
  CHECK_THROWS_AS((void)check_bound_difference(
                      build_perm_rep_instance(2, PermRepVariant::coordinate), Rational(0)),
                  std::invalid_argument);
}

TEST_CASE("adjacent transposition action on masks") {
  CHECK(apply_adjacent_transposition(0b001, 0) == 0b010);
  CHECK(apply_adjacent_transposition(0b010, 0) == 0b001);
  CHECK(apply_adjacent_transposition(0b011, 0) == 0b011);
  CHECK(apply_adjacent_transposition(0b100, 0) == 0b100);
  CHECK(apply_adjacent_transposition(0b110, 1) == 0b110);
  CHECK(apply_adjacent_transposition(0b010, 1) == 0b100);
}
