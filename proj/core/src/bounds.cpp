#include "dqc1/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace dqc1 {

BigNat phi(unsigned A, unsigned M) {
  if (2u * A > M) {
    throw std::invalid_argument("phi requires A <= M/2 (got A=" + std::to_string(A) +
                                ", M=" + std::to_string(M) + ")");
  }
  if (A == 0) return 1;
  return binomial(M, A) - binomial(M, A - 1);
}

namespace {

Partition two_row(unsigned top, unsigned bottom) {
  if (bottom == 0) return top == 0 ? Partition{} : Partition({top});
  return Partition({top, bottom});
}

}  // namespace

BoundReport check_rasala(unsigned M) {
  if (M < 4) throw std::invalid_argument("check_rasala requires M >= 4");
  BoundReport r;
  r.scan_label = "rasala";
  r.m_lo = r.m_hi = M;

  const auto all = partitions_of(M);
  const unsigned half = M / 2;

  // Part 1: fixed first row M-A.
  for (unsigned A = 0; A <= half; ++A) {
    const BigNat bound = phi(A, M);
    bool seen = false;
    ScanMinimum entry;
    entry.label = "A=" + std::to_string(A);
    for (const Partition& p : all) {
      if (p.part(1) != M - A) continue;
      BigNat d = irrep_dimension(p);
      ++r.checked_count;
      if (d < bound) r.violations.push_back({p, bound, d});
      if (!seen || d < entry.dimension) {
        seen = true;
        entry.shape = p;
        entry.dimension = d;
      }
    }
    if (seen) r.minima.push_back(std::move(entry));
  }

  // Part 2: first row and first column both <= M/2.
  {
    const BigNat bound = phi(half, M);
    bool seen = false;
    ScanMinimum entry;
    entry.label = "boxed";
    for (const Partition& p : all) {
      if (2u * p.part(1) > M || 2u * p.rows() > M) continue;
      BigNat d = irrep_dimension(p);
      ++r.checked_count;
      if (d < bound) r.violations.push_back({p, bound, d});
      if (!seen || d < entry.dimension) {
        seen = true;
        entry.shape = p;
        entry.dimension = d;
      }
    }
    if (seen) {
      r.minima.push_back(std::move(entry));
    } else {
      r.notes.push_back("boxed class empty at M=" + std::to_string(M));
    }
  }
  return r;
}

PhiMinimizerReport scan_phi_minimizer(unsigned M) {
  if (M < 4) throw std::invalid_argument("scan_phi_minimizer requires M >= 4");
  PhiMinimizerReport out;
  out.report.scan_label = "phi-minimizer";
  out.report.m_lo = out.report.m_hi = M;

  const unsigned half = M / 2;
  std::vector<BigNat> table(half + 1);
  for (unsigned B = 0; B <= half; ++B) table[B] = phi(B, M);

  bool crossover_found = false;
  out.crossover_a = half;
  for (unsigned A = 0; A <= half; ++A) {
    unsigned best = A;
    for (unsigned B = A + 1; B <= half; ++B) {
      if (table[B] < table[best]) best = B;
    }
    ++out.report.checked_count;
    ScanMinimum entry;
    entry.label = "A=" + std::to_string(A);
    entry.shape = two_row(M - best, best);
    entry.dimension = table[best];
    out.report.minima.push_back(std::move(entry));
    if (!crossover_found && best == half) {
      crossover_found = true;
      out.crossover_a = A;
    }
  }
  out.fitted_c = (M / 2.0 - out.crossover_a) / std::sqrt(static_cast<double>(M));
  out.report.notes.push_back("crossover A=" + std::to_string(out.crossover_a) +
                             ": from there on the interval minimum sits at B=" +
                             std::to_string(half));
  return out;
}

LongRowReport check_long_row_or_column(unsigned M, const BigNat& dim_budget) {
  if (M < 2) throw std::invalid_argument("check_long_row_or_column requires M >= 2");
  LongRowReport out;
  out.report.scan_label = "long-row-or-column";
  out.report.m_lo = out.report.m_hi = M;

  // Largest box side that still fits M cells determines the largest a.
  unsigned max_a = 0;
  while ((M - max_a - 1) * (M - max_a - 1) >= M) ++max_a;

  std::vector<LongRowClassEntry> classes(max_a + 1);
  for (unsigned a = 0; a <= max_a; ++a) classes[a].a = a;

  PartitionEnumerator e(M);
  while (auto p = e.next()) {
    unsigned widest = std::max(p->part(1), p->rows());
    if (widest > M) continue;
    unsigned fits_up_to = M - widest;  // shape lies in the box for all a <= this
    if (fits_up_to > max_a) fits_up_to = max_a;
    BigNat d = irrep_dimension(*p);
    ++out.report.checked_count;
    for (unsigned a = 0; a <= fits_up_to; ++a) {
      auto& cls = classes[a];
      ++cls.class_size;
      if (cls.class_size == 1 || d < cls.min_dimension) {
        cls.min_dimension = d;
        cls.minimizer = *p;
      }
    }
  }

  for (auto& cls : classes) {
    if (cls.class_size == 0) continue;
    cls.exceeds_budget = cls.min_dimension > dim_budget;
    cls.meets_pow2 = cls.min_dimension >= pow_nat(2, cls.a);
    if (cls.exceeds_budget) out.a_star = cls.a;
    ScanMinimum entry;
    entry.label = "A=" + std::to_string(cls.a);
    entry.shape = cls.minimizer;
    entry.dimension = cls.min_dimension;
    out.report.minima.push_back(std::move(entry));
  }
  out.classes = std::move(classes);
  out.report.notes.push_back("a_star=" + std::to_string(out.a_star) +
                             " for budget " + dim_budget.str());
  return out;
}

namespace {

// Deletes the last cell of the first row; legal whenever the first row is
// strictly the longest, which the deficit hypothesis guarantees.
Partition shorten_first_row(const Partition& p) {
  std::vector<unsigned> parts = p.parts();
  parts[0] -= 1;
  if (parts[0] == 0) parts.erase(parts.begin());
  return Partition(std::move(parts));
}

}  // namespace

BoundReport check_shape_lemma(unsigned M) {
  if (M < 3) throw std::invalid_argument("check_shape_lemma requires M >= 3");
  BoundReport r;
  r.scan_label = "shape-lemma";
  r.m_lo = r.m_hi = M;

  std::uint64_t row_cases = 0, col_cases = 0;
  PartitionEnumerator e(M);
  while (auto p = e.next()) {
    for (int pass = 0; pass < 2; ++pass) {
      const Partition shape = pass == 0 ? *p : p->conjugate();
      const unsigned deficit = M - shape.part(1);
      if (2u * deficit >= M) continue;  // hypothesis: deficit < M/2
      const Partition shorter = shorten_first_row(shape);
      const BigNat lhs = BigNat(M) * irrep_dimension(shorter);
      const BigNat rhs = BigNat(M - 2u * deficit) * irrep_dimension(shape);
      ++r.checked_count;
      (pass == 0 ? row_cases : col_cases) += 1;
      if (lhs < rhs) r.violations.push_back({shape, rhs, lhs});
    }
  }
  r.notes.push_back("row cases: " + std::to_string(row_cases) +
                    ", column cases: " + std::to_string(col_cases));
  return r;
}

TheoremReport max_simulatable_qubits(const TheoremParams& params, TheoremMode mode) {
  if (params.n < 1) throw std::invalid_argument("n must be >= 1");
  if (params.delta <= 0 || params.delta > 1) {
    throw std::invalid_argument("delta must lie in (0, 1]");
  }
  if (params.c <= 0) throw std::invalid_argument("c must be positive");

  TheoremReport out;
  out.params = params;
  out.mode = mode;

  if (mode == TheoremMode::representation) {
    out.threshold = Rational(pow_nat(2, params.k + 1)) * params.c * params.n / params.delta;
  } else {
    out.threshold =
        Rational(pow_nat(4, params.k + 1)) * params.c * params.n / (params.delta * params.delta);
  }

  unsigned m = 0;
  if (out.threshold >= 1) {
    BigNat next = 2;
    while (Rational(next) <= out.threshold) {
      ++m;
      next <<= 1;
    }
  } else {
    out.notes.push_back("threshold below 1: no register dimension admissible");
  }
  out.max_qubits = m;

  out.notes.push_back("boundary is inclusive: a register dimension equal to the "
                      "threshold still counts as simulatable");
  if (mode == TheoremMode::general) {
    out.notes.push_back("general mode uses inner constant 4; one derivation step "
                        "supports a tighter constant 2, which would halve the "
                        "threshold's square and lower the answer by one qubit");
  }
  return out;
}

}  // namespace dqc1
