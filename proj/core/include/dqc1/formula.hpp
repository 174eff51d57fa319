#pragma once
// Boolean formulas over variables x1, x2, ... with binary AND/OR and NOT.
// Depth counts AND/OR nodes only; negations are free.

#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace dqc1 {

struct FormulaParseError : std::runtime_error {
  FormulaParseError(const std::string& what, size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  size_t position;
};

class FormulaAst {
 public:
  enum class Op : unsigned char { Var, Not, And, Or };

  struct Node {
    Op op = Op::Var;
    unsigned var = 0;    // 1-based, Var nodes only
    unsigned depth = 0;  // AND/OR nodes on the deepest path below (inclusive)
    std::unique_ptr<Node> lhs;
    std::unique_ptr<Node> rhs;
  };

  // Grammar: formula := var | '!' formula | '(' formula ('&'|'|') formula ')'
  // with var := 'x' digits, index >= 1. Whitespace is ignored.
  static FormulaAst parse(const std::string& text);

  static FormulaAst variable(unsigned index);
  static FormulaAst negation(const FormulaAst& f);
  static FormulaAst conjunction(const FormulaAst& lhs, const FormulaAst& rhs);
  static FormulaAst disjunction(const FormulaAst& lhs, const FormulaAst& rhs);

  FormulaAst(const FormulaAst& other);
  FormulaAst& operator=(const FormulaAst& other);
  FormulaAst(FormulaAst&&) noexcept = default;
  FormulaAst& operator=(FormulaAst&&) noexcept = default;

  [[nodiscard]] const Node& root() const { return *root_; }
  [[nodiscard]] unsigned depth() const { return root_->depth; }
  [[nodiscard]] unsigned num_vars() const { return num_vars_; }  // max index seen
  [[nodiscard]] std::string to_string() const;  // round-trips through parse

 private:
  FormulaAst(std::unique_ptr<Node> root, unsigned num_vars)
      : root_(std::move(root)), num_vars_(num_vars) {}

  friend FormulaAst random_formula(std::mt19937_64& rng, unsigned max_depth, unsigned num_vars);

  std::unique_ptr<Node> root_;
  unsigned num_vars_ = 0;
};

// assignment[i-1] holds the value of x_i; throws std::out_of_range on a
// variable past the end.
[[nodiscard]] bool eval_formula(const FormulaAst& f, const std::vector<bool>& assignment);

// Uniform random tree with every leaf a variable in 1..num_vars and
// AND/OR depth at most max_depth. Deterministic in the generator state.
[[nodiscard]] FormulaAst random_formula(std::mt19937_64& rng, unsigned max_depth,
                                        unsigned num_vars);

// "x1=1,x2=0" -> vector of size num_vars; every variable must be assigned
// exactly once. Throws std::invalid_argument on errors.
[[nodiscard]] std::vector<bool> parse_assignment(const std::string& text, unsigned num_vars);

}  // namespace dqc1
