#pragma once
// Exhaustive verification of symmetric-group dimension lower bounds at
// small degree, and the register-size calculator derived from them.

#include <cstdint>
#include <string>
#include <vector>

#include "dqc1/numeric.hpp"
#include "dqc1/partition.hpp"

namespace dqc1 {

// phi(A, M) = C(M,A) - C(M,A-1), the dimension of the two-row shape
// (M-A, A). Requires 2A <= M; throws std::invalid_argument otherwise.
[[nodiscard]] BigNat phi(unsigned A, unsigned M);

struct ScanViolation {
  Partition shape;
  BigNat required;  // the bound the shape had to meet
  BigNat actual;
};

struct ScanMinimum {
  std::string label;  // e.g. "A=3" or "boxed"
  Partition shape;    // first minimizer in scan order
  BigNat dimension;
};

struct BoundReport {
  std::string scan_label;
  unsigned m_lo = 0, m_hi = 0;  // degree range covered
  std::uint64_t checked_count = 0;
  std::vector<ScanViolation> violations;  // empty iff the bound held everywhere
  std::vector<ScanMinimum> minima;
  std::vector<std::string> notes;
};

// Two-part scan at degree M (requires M >= 4):
//   part 1: every shape with first row exactly M-A (A <= M/2) has
//           dimension >= phi(A, M), with the minimum at (M-A, A);
//   part 2: every shape with first row and first column both <= M/2 has
//           dimension >= phi(floor(M/2), M).
[[nodiscard]] BoundReport check_rasala(unsigned M);

struct PhiMinimizerReport {
  BoundReport report;    // minima: argmin_B phi(B, M) over A <= B <= M/2, per A
  unsigned crossover_a;  // smallest A whose argmin sits at floor(M/2)
  double fitted_c;       // (M/2 - crossover_a) / sqrt(M)
};

// Requires M >= 4.
[[nodiscard]] PhiMinimizerReport scan_phi_minimizer(unsigned M);

struct LongRowClassEntry {
  unsigned a = 0;
  std::uint64_t class_size = 0;  // shapes with first row and column <= M-a
  Partition minimizer;
  BigNat min_dimension;
  bool exceeds_budget = false;   // min_dimension > dim_budget
  bool meets_pow2 = false;       // min_dimension >= 2^a
};

struct LongRowReport {
  BoundReport report;
  std::vector<LongRowClassEntry> classes;
  unsigned a_star = 0;  // largest a with a nonempty class whose min exceeds the budget
};

// Requires M >= 2. For each a with a nonempty class, reports the minimum
// dimension over shapes confined to an (M-a) x (M-a) box.
[[nodiscard]] LongRowReport check_long_row_or_column(unsigned M, const BigNat& dim_budget);

// For every shape of M whose first-row deficit l = M - first row is < M/2,
// checks M * dim(shape minus last first-row cell) >= (M - 2l) * dim(shape),
// then repeats for columns via the conjugate. Exact integers, no tolerance.
// Requires M >= 3.
[[nodiscard]] BoundReport check_shape_lemma(unsigned M);

enum class TheoremMode { representation, general };

struct TheoremParams {
  unsigned n = 1;      // problem size driving the subspace count, n >= 1
  unsigned k = 0;      // clean qubits
  Rational delta{1};   // required distinguishability margin, in (0, 1]
  Rational c{1};       // slack constant, > 0
};

struct TheoremReport {
  TheoremParams params;
  TheoremMode mode = TheoremMode::general;
  Rational threshold;      // largest admissible register dimension
  unsigned max_qubits = 0; // largest m with 2^m <= threshold (0 if none)
  std::vector<std::string> notes;
};

// representation mode: threshold = 2^(k+1) * c * n / delta
// general mode:        threshold = 4^(k+1) * c * n / delta^2
// A register meeting the threshold exactly still counts (inclusive
// boundary); the report says so.
[[nodiscard]] TheoremReport max_simulatable_qubits(const TheoremParams& params, TheoremMode mode);

}  // namespace dqc1
