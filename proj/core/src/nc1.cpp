#include "dqc1/nc1.hpp"

namespace dqc1 {

std::pair<Rational, Rational> accept_probability(const FormulaAst& f,
                                                 const std::vector<bool>& assignment, unsigned n,
                                                 unsigned k) {
  const PermBP bp = compile_formula(FormulaAst::negation(f));
  RegisterState s = RegisterState::fresh(n, k);
  s = run_bp(s, bp, assignment);
  return measure(s, 1);
}

}  // namespace dqc1
