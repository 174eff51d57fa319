#pragma once
// End-to-end accept statistics: formula -> width-5 program -> register
// run -> first-qubit marginal.
//
// The accept convention: the wrapper compiles the negated formula, so an
// accepting input drives the register with the identity and the first
// qubit reads 1 with probability exactly 0; a rejecting input applies the
// accept five-cycle and the probability is exactly 1/4 (one of the four
// support strings lands on the 100 prefix).
//
// Note the rejecting action must be a five-cycle, not a transposition: a
// width-5 permutation program multiplies even permutations, so no odd
// permutation is reachable. The first-qubit statistics are the same.

#include <utility>
#include <vector>

#include "dqc1/formula.hpp"
#include "dqc1/register_state.hpp"

namespace dqc1 {

// (p0, p1) of qubit 1 after running the wrapped formula on a fresh
// (n, k) diagonal register. Defaults to the canonical 3-qubit register
// with one clean qubit.
[[nodiscard]] std::pair<Rational, Rational> accept_probability(const FormulaAst& f,
                                                               const std::vector<bool>& assignment,
                                                               unsigned n = 3, unsigned k = 1);

}  // namespace dqc1
