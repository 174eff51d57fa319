#pragma once
// Width-5 permutation branching programs and the formula compiler.
//
// A program of depth-d formula has length exactly 4^d: AND doubles both
// children (commutator gadget), OR goes through De Morgan, and NOT folds a
// fixed permutation into the child's last instruction at zero length cost.
// The compiler's convention is identity for 0 and the accept permutation
// (a fixed 5-cycle) for 1; shorter children are padded with no-ops so the
// quarter segments line up.

#include <cstdint>
#include <vector>

#include "dqc1/formula.hpp"
#include "dqc1/perm5.hpp"

namespace dqc1 {

struct BpInstruction {
  unsigned var = 1;  // 1-based variable index
  Perm5 if_zero;
  Perm5 if_one;
  friend bool operator==(const BpInstruction&, const BpInstruction&) = default;
};

struct PermBP {
  unsigned num_vars = 0;
  Perm5 accept_perm;  // a 5-cycle
  std::vector<BpInstruction> instructions;
  friend bool operator==(const PermBP&, const PermBP&) = default;
};

// The fixed accept permutation (1 2 3 4 5).
[[nodiscard]] Perm5 barrington_sigma();

// Pure and deterministic: identical ASTs yield identical programs.
// Throws std::invalid_argument for formulas deeper than 10 (the program
// would exceed 4^10 instructions).
[[nodiscard]] PermBP compile_formula(const FormulaAst& f);

// Left-to-right product of the selected per-instruction permutations.
// Throws std::out_of_range if an instruction references a variable the
// assignment does not cover.
[[nodiscard]] Perm5 eval_bp(const PermBP& bp, const std::vector<bool>& assignment);

}  // namespace dqc1
