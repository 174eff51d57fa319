#include "dqc1/branching_program.hpp"

#include <stdexcept>

namespace dqc1 {

namespace {

using Node = FormulaAst::Node;
using Op = FormulaAst::Op;

// Commutator witnesses: both five-cycles, and alpha * beta * alpha^-1 * beta^-1
// is again a five-cycle (verified in the unit tests).
const Perm5& witness_alpha() {
  static const Perm5 a = Perm5::cycle({1, 2, 3, 4, 5});
  return a;
}

const Perm5& witness_beta() {
  static const Perm5 b = Perm5::cycle({1, 3, 5, 4, 2});
  return b;
}

const Perm5& witness_commutator() {
  static const Perm5 k = witness_alpha() * witness_beta() * witness_alpha().inverse() *
                         witness_beta().inverse();
  return k;
}

// gamma with gamma * from * gamma^-1 == to, for five-cycles: map the cycle
// of `from` written from 1 onto the cycle of `to` written from 1.
Perm5 find_conjugator(const Perm5& from, const Perm5& to) {
  std::array<std::uint8_t, 5> delta{};
  std::uint8_t a = 1, b = 1;
  for (int step = 0; step < 5; ++step) {
    delta[a - 1] = b;
    a = from(a);
    b = to(b);
  }
  return Perm5::from_images(delta).inverse();
}

std::uint64_t pow4(unsigned d) { return std::uint64_t{1} << (2 * d); }

void pad_to(std::vector<BpInstruction>& prog, std::uint64_t len) {
  // No-op instructions keep the computed permutation and the length budget.
  while (prog.size() < len) prog.push_back(BpInstruction{1, Perm5{}, Perm5{}});
}

void append(std::vector<BpInstruction>& out, std::vector<BpInstruction>&& seg) {
  out.insert(out.end(), std::make_move_iterator(seg.begin()), std::make_move_iterator(seg.end()));
}

// Emits a program that evaluates to `target` when the node is true and to
// the identity when it is false.
std::vector<BpInstruction> compile_node(const Node& n, const Perm5& target);

// Same, with the node's value negated: `target` when false, identity when true.
std::vector<BpInstruction> compile_negated(const Node& n, const Perm5& target) {
  auto prog = compile_node(n, target.inverse());
  prog.back().if_zero = prog.back().if_zero * target;
  prog.back().if_one = prog.back().if_one * target;
  return prog;
}

std::vector<BpInstruction> compile_node(const Node& n, const Perm5& target) {
  switch (n.op) {
    case Op::Var:
      return {BpInstruction{n.var, Perm5{}, target}};
    case Op::Not:
      return compile_negated(*n.lhs, target);
    case Op::And: {
      const Perm5 gamma = find_conjugator(witness_commutator(), target);
      const Perm5 ginv = gamma.inverse();
      const Perm5 a = gamma * witness_alpha() * ginv;
      const Perm5 b = gamma * witness_beta() * ginv;
      const std::uint64_t quarter = pow4(n.depth - 1);
      std::vector<BpInstruction> segs[4] = {
          compile_node(*n.lhs, a), compile_node(*n.rhs, b),
          compile_node(*n.lhs, a.inverse()), compile_node(*n.rhs, b.inverse())};
      std::vector<BpInstruction> out;
      out.reserve(4 * quarter);
      for (auto& s : segs) {
        pad_to(s, quarter);
        append(out, std::move(s));
      }
      return out;
    }
    case Op::Or: {
      // De Morgan: the AND of the negated children, negated once more.
      const Perm5 outer = target.inverse();
      const Perm5 gamma = find_conjugator(witness_commutator(), outer);
      const Perm5 ginv = gamma.inverse();
      const Perm5 a = gamma * witness_alpha() * ginv;
      const Perm5 b = gamma * witness_beta() * ginv;
      const std::uint64_t quarter = pow4(n.depth - 1);
      std::vector<BpInstruction> segs[4] = {
          compile_negated(*n.lhs, a), compile_negated(*n.rhs, b),
          compile_negated(*n.lhs, a.inverse()), compile_negated(*n.rhs, b.inverse())};
      std::vector<BpInstruction> out;
      out.reserve(4 * quarter);
      for (auto& s : segs) {
        pad_to(s, quarter);
        append(out, std::move(s));
      }
      out.back().if_zero = out.back().if_zero * target;
      out.back().if_one = out.back().if_one * target;
      return out;
    }
  }
  throw std::logic_error("corrupt formula node");
}

}  // namespace

Perm5 barrington_sigma() { return Perm5::cycle({1, 2, 3, 4, 5}); }

PermBP compile_formula(const FormulaAst& f) {
  if (f.depth() > 10) {
    throw std::invalid_argument("formula depth " + std::to_string(f.depth()) +
                                " exceeds the supported maximum of 10");
  }
  PermBP bp;
  bp.num_vars = f.num_vars();
  bp.accept_perm = barrington_sigma();
  bp.instructions = compile_node(f.root(), bp.accept_perm);
  return bp;
}

Perm5 eval_bp(const PermBP& bp, const std::vector<bool>& assignment) {
  Perm5 r;
  for (const BpInstruction& ins : bp.instructions) {
    if (ins.var == 0 || ins.var > assignment.size()) {
      throw std::out_of_range("assignment missing x" + std::to_string(ins.var));
    }
    r = r * (assignment[ins.var - 1] ? ins.if_one : ins.if_zero);
  }
  return r;
}

}  // namespace dqc1
