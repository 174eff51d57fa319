#include "dqc1/formula.hpp"

#include <cctype>

namespace dqc1 {

namespace {

using Node = FormulaAst::Node;
using Op = FormulaAst::Op;

std::unique_ptr<Node> clone(const Node& n) {
  auto out = std::make_unique<Node>();
  out->op = n.op;
  out->var = n.var;
  out->depth = n.depth;
  if (n.lhs) out->lhs = clone(*n.lhs);
  if (n.rhs) out->rhs = clone(*n.rhs);
  return out;
}

unsigned max_var(const Node& n) {
  unsigned m = n.var;
  if (n.lhs) m = std::max(m, max_var(*n.lhs));
  if (n.rhs) m = std::max(m, max_var(*n.rhs));
  return m;
}

struct Parser {
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) { throw FormulaParseError(what, pos); }

  std::unique_ptr<Node> formula() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of formula");
    char c = text[pos];
    if (c == '!') {
      ++pos;
      auto n = std::make_unique<Node>();
      n->op = Op::Not;
      n->lhs = formula();
      n->depth = n->lhs->depth;
      return n;
    }
    if (c == '(') {
      ++pos;
      auto lhs = formula();
      skip_ws();
      if (pos >= text.size() || (text[pos] != '&' && text[pos] != '|')) {
        fail("expected '&' or '|'");
      }
      char op = text[pos];
      ++pos;
      auto rhs = formula();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      auto n = std::make_unique<Node>();
      n->op = op == '&' ? Op::And : Op::Or;
      n->depth = 1 + std::max(lhs->depth, rhs->depth);
      n->lhs = std::move(lhs);
      n->rhs = std::move(rhs);
      return n;
    }
    if (c == 'x') {
      ++pos;
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        fail("expected variable index after 'x'");
      }
      unsigned long v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
        if (v > 1'000'000UL) fail("variable index out of range");
        ++pos;
      }
      if (v == 0) fail("variable indices start at 1");
      auto n = std::make_unique<Node>();
      n->op = Op::Var;
      n->var = static_cast<unsigned>(v);
      return n;
    }
    fail("expected '!', '(' or a variable");
  }
};

void print(const Node& n, std::string& out) {
  switch (n.op) {
    case Op::Var:
      out += 'x';
      out += std::to_string(n.var);
      break;
    case Op::Not:
      out += '!';
      print(*n.lhs, out);
      break;
    case Op::And:
    case Op::Or:
      out += '(';
      print(*n.lhs, out);
      out += n.op == Op::And ? '&' : '|';
      print(*n.rhs, out);
      out += ')';
      break;
  }
}

bool eval(const Node& n, const std::vector<bool>& assignment) {
  switch (n.op) {
    case Op::Var:
      if (n.var > assignment.size()) {
        throw std::out_of_range("assignment missing x" + std::to_string(n.var));
      }
      return assignment[n.var - 1];
    case Op::Not:
      return !eval(*n.lhs, assignment);
    case Op::And:
      return eval(*n.lhs, assignment) && eval(*n.rhs, assignment);
    case Op::Or:
      return eval(*n.lhs, assignment) || eval(*n.rhs, assignment);
  }
  throw std::logic_error("corrupt formula node");
}

std::unique_ptr<Node> random_node(std::mt19937_64& rng, unsigned depth_left, unsigned num_vars) {
  std::uniform_int_distribution<int> kind(0, depth_left == 0 ? 1 : 3);
  int k = kind(rng);
  auto n = std::make_unique<Node>();
  if (k == 0) {
    std::uniform_int_distribution<unsigned> var(1, num_vars);
    n->op = Op::Var;
    n->var = var(rng);
    return n;
  }
  if (k == 1) {
    n->op = Op::Not;
    n->lhs = random_node(rng, depth_left, num_vars);
    n->depth = n->lhs->depth;
    return n;
  }
  n->op = k == 2 ? Op::And : Op::Or;
  n->lhs = random_node(rng, depth_left - 1, num_vars);
  n->rhs = random_node(rng, depth_left - 1, num_vars);
  n->depth = 1 + std::max(n->lhs->depth, n->rhs->depth);
  return n;
}

}  // namespace

FormulaAst FormulaAst::parse(const std::string& text) {
  Parser p{text};
  auto root = p.formula();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing characters");
  unsigned vars = max_var(*root);
  return FormulaAst(std::move(root), vars);
}

FormulaAst FormulaAst::variable(unsigned index) {
  if (index == 0) throw std::invalid_argument("variable indices start at 1");
  auto n = std::make_unique<Node>();
  n->op = Op::Var;
  n->var = index;
  return FormulaAst(std::move(n), index);
}

FormulaAst FormulaAst::negation(const FormulaAst& f) {
  auto n = std::make_unique<Node>();
  n->op = Op::Not;
  n->lhs = clone(*f.root_);
  n->depth = n->lhs->depth;
  return FormulaAst(std::move(n), f.num_vars_);
}

FormulaAst FormulaAst::conjunction(const FormulaAst& lhs, const FormulaAst& rhs) {
  auto n = std::make_unique<Node>();
  n->op = Op::And;
  n->lhs = clone(*lhs.root_);
  n->rhs = clone(*rhs.root_);
  n->depth = 1 + std::max(n->lhs->depth, n->rhs->depth);
  return FormulaAst(std::move(n), std::max(lhs.num_vars_, rhs.num_vars_));
}

FormulaAst FormulaAst::disjunction(const FormulaAst& lhs, const FormulaAst& rhs) {
  auto n = std::make_unique<Node>();
  n->op = Op::Or;
  n->lhs = clone(*lhs.root_);
  n->rhs = clone(*rhs.root_);
  n->depth = 1 + std::max(n->lhs->depth, n->rhs->depth);
  return FormulaAst(std::move(n), std::max(lhs.num_vars_, rhs.num_vars_));
}

FormulaAst::FormulaAst(const FormulaAst& other)
    : root_(clone(*other.root_)), num_vars_(other.num_vars_) {}

FormulaAst& FormulaAst::operator=(const FormulaAst& other) {
  if (this != &other) {
    root_ = clone(*other.root_);
    num_vars_ = other.num_vars_;
  }
  return *this;
}

std::string FormulaAst::to_string() const {
  std::string out;
  print(*root_, out);
  return out;
}

bool eval_formula(const FormulaAst& f, const std::vector<bool>& assignment) {
  return eval(f.root(), assignment);
}

FormulaAst random_formula(std::mt19937_64& rng, unsigned max_depth, unsigned num_vars) {
  if (num_vars == 0) throw std::invalid_argument("need at least one variable");
  auto root = random_node(rng, max_depth, num_vars);
  unsigned vars = max_var(*root);
  return FormulaAst(std::move(root), vars);
}

std::vector<bool> parse_assignment(const std::string& text, unsigned num_vars) {
  std::vector<bool> values(num_vars, false);
  std::vector<bool> assigned(num_vars, false);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip_ws();
    if (i >= text.size() || text[i] != 'x') {
      throw std::invalid_argument("expected 'x<idx>=<0|1>' at position " + std::to_string(i) +
                                  " in '" + text + "'");
    }
    ++i;
    unsigned long idx = 0;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("expected variable index in '" + text + "'");
    }
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      idx = idx * 10 + static_cast<unsigned long>(text[i] - '0');
      ++i;
    }
    if (idx == 0 || idx > num_vars) {
      throw std::invalid_argument("variable x" + std::to_string(idx) + " out of range");
    }
    skip_ws();
    if (i >= text.size() || text[i] != '=') throw std::invalid_argument("expected '='");
    ++i;
    skip_ws();
    if (i >= text.size() || (text[i] != '0' && text[i] != '1')) {
      throw std::invalid_argument("expected 0 or 1 for x" + std::to_string(idx));
    }
    if (assigned[idx - 1]) {
      throw std::invalid_argument("x" + std::to_string(idx) + " assigned twice");
    }
    assigned[idx - 1] = true;
    values[idx - 1] = text[i] == '1';
    ++i;
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != ',') throw std::invalid_argument("expected ',' between assignments");
    ++i;
  }
  for (unsigned v = 0; v < num_vars; ++v) {
    if (!assigned[v]) {
      throw std::invalid_argument("missing assignment for x" + std::to_string(v + 1));
    }
  }
  return values;
}

}  // namespace dqc1
