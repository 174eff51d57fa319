#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dqc1/bounds.hpp"
#include "dqc1/partition.hpp"

#include <algorithm>
#include <vector>

using namespace dqc1;

namespace {

Partition two_row(unsigned m, unsigned a) {
  return a == 0 ? Partition({m}) : Partition({m - a, a});
}

}  // namespace

TEST_CASE("phi worked values") {
  CHECK(phi(2, 11) == 44);
  CHECK(phi(0, 7) == 1);
  CHECK(phi(1, 9) == 8);
  CHECK(phi(3, 6) == 5);
  CHECK(phi(2, 4) == 2);
  CHECK_THROWS_AS((void)phi(5, 9), std::invalid_argument);
}

TEST_CASE("phi equals the two-row dimension by two independent routes") {
  for (unsigned m = 1; m <= 18; ++m) {
    for (unsigned a = 0; 2 * a <= m; ++a) {
      const BigNat direct = phi(a, m);
      CHECK(direct == irrep_dimension(two_row(m, a)));
      // Product form C(M,A) * (M-2A+1) / (M-A+1), derived independently
      // from the hook pattern of a two-row shape.
      const BigNat product_form = binomial(m, a) * (m - 2 * a + 1) / (m - a + 1);
      CHECK(direct == product_form);
    }
  }
}

TEST_CASE("first-row scan finds the two-row minimum and no violations") {
  for (unsigned m = 4; m <= 14; ++m) {
    const auto report = check_rasala(m);
    CHECK(report.violations.empty());
    CHECK(report.checked_count > 0);
    for (const auto& min : report.minima) {
      if (min.label == "boxed") continue;
      REQUIRE(min.label.substr(0, 2) == "A=");
      const unsigned a = static_cast<unsigned>(std::stoul(min.label.substr(2)));
      CHECK(min.shape == two_row(m, a));
      CHECK(min.dimension == phi(a, m));
    }
  }
}

TEST_CASE("first-row scan worked examples") {
  const auto r11 = check_rasala(11);
  bool saw_a2 = false;
  for (const auto& min : r11.minima) {
    if (min.label == "A=2") {
      saw_a2 = true;
      CHECK(min.shape.to_string() == "[9,2]");
      CHECK(min.dimension == 44);
    }
    if (min.label == "A=0") {
      CHECK(min.shape.to_string() == "[11]");
      CHECK(min.dimension == 1);
    }
  }
  CHECK(saw_a2);

  // Boxed class at M=4 is just [2,2]; its dimension meets the bound with equality.
  const auto r4 = check_rasala(4);
  bool saw_boxed = false;
  for (const auto& min : r4.minima) {
    if (min.label == "boxed") {
      saw_boxed = true;
      CHECK(min.shape.to_string() == "[2,2]");
      CHECK(min.dimension == phi(2, 4));
    }
  }
  CHECK(saw_boxed);
}

TEST_CASE("phi minimizer scan pins the crossover") {
  const auto scan = scan_phi_minimizer(16);
  CHECK(scan.report.violations.empty());
  CHECK(scan.crossover_a == 5);
  CHECK(scan.fitted_c == doctest::Approx(0.75));

  // Endpoints of the reported minima: A=1 stays low, near the top the
  // argmin moves to floor(M/2).
  for (const auto& min : scan.report.minima) {
    if (min.label == "A=1") CHECK(min.shape == Partition({15, 1}));
    if (min.label == "A=7") CHECK(min.shape == Partition({8, 8}));
    if (min.label == "A=8") CHECK(min.shape == Partition({8, 8}));
  }

  for (unsigned m = 4; m <= 24; ++m) {
    const auto s = scan_phi_minimizer(m);
    // The crossover sits below M/2 by an O(sqrt(M)) margin.
    CHECK(2 * s.crossover_a <= m);
    CHECK(static_cast<double>(m) / 2 - s.crossover_a <= 2 * std::sqrt(m));
    // Each reported minimum really is the minimum of its tail range.
    for (const auto& min : s.report.minima) {
      const unsigned a = static_cast<unsigned>(std::stoul(min.label.substr(2)));
      BigNat best = phi(a, m);
      for (unsigned b = a; 2 * b <= m; ++b) best = std::min(best, phi(b, m));
      CHECK(min.dimension == best);
    }
  }
}

TEST_CASE("boxed shape class minimum dimensions against a budget") {
  const auto r = check_long_row_or_column(12, BigNat(16));
  CHECK(r.report.violations.empty());
  bool saw_a4 = false;
  for (const auto& entry : r.classes) {
    if (entry.a == 4) {
      saw_a4 = true;
      CHECK(entry.min_dimension > 16);
      CHECK(entry.exceeds_budget);
    }
    CHECK(entry.meets_pow2);
  }
  CHECK(saw_a4);

  // An absurd budget defeats every class.
  const auto high = check_long_row_or_column(12, factorial(11) / 2);
  CHECK(high.a_star == 0);

  // Budget zero is cleared by every nonempty class.
  const auto zero = check_long_row_or_column(12, BigNat(0));
  CHECK(zero.a_star == zero.classes.back().a);
  CHECK(zero.a_star > 0);
}

TEST_CASE("boxed classes meet the power-of-two floor when the box is roomy") {
  // The floor can fail only when 2a >= m: the surviving box is then so tight
  // that just a few squarish shapes fit, and their dimensions stay small.
  for (unsigned m = 4; m <= 16; ++m) {
    const auto r = check_long_row_or_column(m, BigNat(1));
    for (const auto& entry : r.classes) {
      if (2 * entry.a < m) CHECK(entry.meets_pow2);
    }
  }

  // Pin the tight-box exceptions in this range.
  struct Exception {
    unsigned m;
    unsigned a;
    Partition minimizer;
    BigNat dim;
  };
  const std::vector<Exception> exceptions = {
      {4, 2, Partition({2, 2}), BigNat(2)},
      {6, 3, Partition({3, 3}), BigNat(5)},
      {8, 4, Partition({4, 4}), BigNat(14)},
      {9, 6, Partition({3, 3, 3}), BigNat(42)},
  };
  for (unsigned m = 4; m <= 16; ++m) {
    const auto r = check_long_row_or_column(m, BigNat(1));
    for (const auto& entry : r.classes) {
      const bool expected_miss =
          std::any_of(exceptions.begin(), exceptions.end(),
                      [&](const Exception& e) { return e.m == m && e.a == entry.a; });
      CHECK(entry.meets_pow2 == !expected_miss);
      if (expected_miss) {
        const auto it = std::find_if(exceptions.begin(), exceptions.end(),
                                     [&](const Exception& e) { return e.m == m && e.a == entry.a; });
        CHECK(entry.minimizer == it->minimizer);
        CHECK(entry.min_dimension == it->dim);
      }
    }
  }
}

TEST_CASE("row deletion inequality scan") {
  for (unsigned m = 3; m <= 14; ++m) {
    const auto r = check_shape_lemma(m);
    CHECK(r.violations.empty());
    CHECK(r.checked_count > 0);
  }
}

TEST_CASE("row deletion equality edge at the single-row shape") {
  // Shape (M): deficit 0, deleting the last cell gives (M-1); both sides
  // of M * dim((M-1)) >= M * dim((M)) equal M.
  const auto r = check_shape_lemma(9);
  CHECK(r.violations.empty());
}

TEST_CASE("register calculator worked examples") {
  TheoremParams p;
  p.n = 1024;
  p.k = 1;
  p.delta = Rational(1, 2);
  p.c = Rational(1);

  const auto general = max_simulatable_qubits(p, TheoremMode::general);
  CHECK(general.max_qubits == 16);
  CHECK(general.threshold == Rational(65536));

  const auto repr = max_simulatable_qubits(p, TheoremMode::representation);
  CHECK(repr.threshold == Rational(8192));
  CHECK(repr.max_qubits == 13);

  TheoremParams tiny;
  tiny.n = 1;
  tiny.k = 0;
  tiny.delta = Rational(1);
  tiny.c = Rational(1);
  CHECK(max_simulatable_qubits(tiny, TheoremMode::representation).max_qubits == 1);

  // Threshold below 1: no register qualifies, sentinel 0.
  TheoremParams sub;
  sub.n = 1;
  sub.k = 0;
  sub.delta = Rational(1);
  sub.c = Rational(1, 100);
  CHECK(max_simulatable_qubits(sub, TheoremMode::representation).max_qubits == 0);

  TheoremParams bad;
  bad.delta = Rational(2);
  CHECK_THROWS_AS((void)max_simulatable_qubits(bad, TheoremMode::general),
                  std::invalid_argument);
  bad.delta = Rational(0);
  CHECK_THROWS_AS((void)max_simulatable_qubits(bad, TheoremMode::general),
                  std::invalid_argument);
}

TEST_CASE("register calculator monotonicity") {
  TheoremParams base;
  base.n = 64;
  base.k = 1;
  base.delta = Rational(1, 2);
  base.c = Rational(1);
  for (auto mode : {TheoremMode::representation, TheoremMode::general}) {
    unsigned prev = 0;
    for (unsigned n = 1; n <= 256; n *= 2) {
      TheoremParams p = base;
      p.n = n;
      const auto m = max_simulatable_qubits(p, mode).max_qubits;
      CHECK(m >= prev);
      prev = m;
    }
    prev = 0;
    for (unsigned k = 0; k <= 6; ++k) {
      TheoremParams p = base;
      p.k = k;
      const auto m = max_simulatable_qubits(p, mode).max_qubits;
      CHECK(m >= prev);
      prev = m;
    }
    // Shrinking delta never shrinks the answer.
    unsigned prev_up = 0;
    for (int denom = 1; denom <= 32; denom *= 2) {
      TheoremParams p = base;
      p.delta = Rational(1, denom);
      const auto m = max_simulatable_qubits(p, mode).max_qubits;
      CHECK(m >= prev_up);
      prev_up = m;
    }
  }
}
