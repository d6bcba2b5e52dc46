#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qcalc/rational.hpp"

namespace qcalc {

/// Expression grammar:
///
///   expr     := term (("+" | "-") term)*
///   term     := factor (("*" | "/")? factor)*     missing operator = product
///   factor   := "-" factor | atom ("^" exponent)?
///   atom     := NUMBER | IDENT | "(" expr ")"
///   exponent := ("-")? INT ("/" INT)? | "(" ("-")? INT ("/" INT)? ")"
///   NUMBER   := INT ("." DIGITS)? | INT "/" INT
///   IDENT    := [A-Za-z_][A-Za-z0-9_]*
///
/// "3 m" multiplies; a "-" after a complete atom is always binary, so
/// juxtaposition never swallows a subtraction. "^" binds tighter than unary
/// minus: -2^2 is -(2^2). Exponents are literal rationals, not expressions.
/// A slash directly between digits is part of one NUMBER ("1/100"); anywhere
/// else it divides.

enum class TokKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::string text;
  int line = 1;
  int col = 1;
};

std::vector<Token> tokenize(const std::string& input);  // throws SyntaxError

struct Expr {
  enum class Kind { Number, Unit, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind;
  std::string text;       // Number: literal text; Unit: name
  Rational exponent{0};   // Pow only
  std::unique_ptr<Expr> lhs, rhs;
  int line = 1;
  int col = 1;
};

using ExprPtr = std::unique_ptr<Expr>;

ExprPtr parse_expression(const std::string& input);  // throws SyntaxError

}  // namespace qcalc
