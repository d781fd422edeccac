#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "wheelgebra/diffop.hpp"
#include "wheelgebra/wheel.hpp"

namespace wg {

// Expression grammar for elements and operators over a loaded quiver (see
// docs/grammar.md for the EBNF):
//
//   sum     = tensor { ("+" | "-") tensor }
//   tensor  = product { "#" product }
//   product = atom { "*" atom }
//   atom    = rational | name | "[" sum "]" | "(" sum ")"
//           | "dd(" sum ")" | "mul(" sum ")"
//
// Names are arrow names, reversed names like "x*", differential names like
// "dx", and vertex idempotents "e_v". A "*" directly attached to an
// identifier is part of the name; the product operator needs spacing.
struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

struct Expr {
  enum class Kind { Rational, Name, Sum, Product, Tensor, Cyclic, Neg, DD, Mul };
  Kind kind;
  Rational value;             // Rational
  std::string name;           // Name
  std::vector<ExprPtr> args;  // composite nodes
};

// Thrown with a 1-based column position on lexical or syntax errors.
struct ParseError : std::runtime_error {
  int column;
  ParseError(const std::string& msg, int col)
      : std::runtime_error(msg + " at column " + std::to_string(col)), column(col) {}
};

ExprPtr parse_expr(const std::string& text);
std::string print_expr(const Expr& e);

// Evaluation result: either an element of the wheelgebra or an operator.
struct EvalResult {
  std::variant<WheelElement, WheeledDiffOp> value;
  bool is_op() const { return value.index() == 1; }
  const WheelElement& element() const { return std::get<WheelElement>(value); }
  const WheeledDiffOp& op() const { return std::get<WheeledDiffOp>(value); }
};

EvalResult eval_expr(const Quiver& q, const Expr& e);
WheelElement eval_element(const Quiver& q, const std::string& text);
WheeledDiffOp eval_operator(const Quiver& q, const std::string& text);

}  // namespace wg
