#include "qcalc/expr.hpp"

#include <cctype>

#include "qcalc/errors.hpp"

namespace qcalc {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<Token> tokenize(const std::string& input) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0, n = input.size();
  auto advance = [&](size_t k) {
    for (size_t j = 0; j < k; ++j, ++i) {
      if (input[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < n) {
    char c = input[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t{TokKind::End, "", line, col};
    if (digit(c)) {
      size_t j = i;
      while (j < n && digit(input[j])) ++j;
      if (j < n && input[j] == '.') {
        ++j;
        if (j >= n || !digit(input[j]))
          throw SyntaxError("expected digits after decimal point", line, col);
        while (j < n && digit(input[j])) ++j;
      } else if (j + 1 < n && input[j] == '/' && digit(input[j + 1])) {
        ++j;
        while (j < n && digit(input[j])) ++j;
      }
      t.kind = TokKind::Number;
      t.text = input.substr(i, j - i);
      advance(j - i);
    } else if (ident_start(c)) {
      size_t j = i;
      while (j < n && ident_char(input[j])) ++j;
      t.kind = TokKind::Ident;
      t.text = input.substr(i, j - i);
      advance(j - i);
    } else {
      switch (c) {
        case '+': t.kind = TokKind::Plus; break;
        case '-': t.kind = TokKind::Minus; break;
        case '*': t.kind = TokKind::Star; break;
        case '/': t.kind = TokKind::Slash; break;
        case '^': t.kind = TokKind::Caret; break;
        case '(': t.kind = TokKind::LParen; break;
        case ')': t.kind = TokKind::RParen; break;
        default:
          throw SyntaxError(std::string("unexpected character '") + c + "'",
                            line, col);
      }
      t.text = c;
      advance(1);
    }
    out.push_back(std::move(t));
  }
  out.push_back(Token{TokKind::End, "", line, col});
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr run() {
    ExprPtr e = expr();
    if (peek().kind != TokKind::End) fail("unexpected token");
    return e;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool at(TokKind k) const { return peek().kind == k; }

  /// Errors at End report the last real token: "3 +" points at the "+".
  [[noreturn]] void fail(const std::string& msg) const {
    const Token* t = &peek();
    if (t->kind == TokKind::End && pos_ > 0) t = &toks_[pos_ - 1];
    throw SyntaxError(msg, t->line, t->col);
  }

  static ExprPtr node(Expr::Kind k, const Token& t) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->line = t.line;
    e->col = t.col;
    return e;
  }

  ExprPtr binary(Expr::Kind k, const Token& t, ExprPtr l, ExprPtr r) {
    ExprPtr e = node(k, t);
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (at(TokKind::Plus) || at(TokKind::Minus)) {
      Token op = next();
      e = binary(op.kind == TokKind::Plus ? Expr::Kind::Add : Expr::Kind::Sub,
                 op, std::move(e), term());
    }
    return e;
  }

  static bool starts_factor(const Token& t) {
    return t.kind == TokKind::Number || t.kind == TokKind::Ident ||
           t.kind == TokKind::LParen;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (true) {
      if (at(TokKind::Star) || at(TokKind::Slash)) {
        Token op = next();
        e = binary(
            op.kind == TokKind::Star ? Expr::Kind::Mul : Expr::Kind::Div, op,
            std::move(e), factor());
      } else if (starts_factor(peek())) {
        Token at_tok = peek();
        e = binary(Expr::Kind::Mul, at_tok, std::move(e), factor());
      } else {
        return e;
      }
    }
  }

  ExprPtr factor() {
    if (at(TokKind::Minus)) {
      Token op = next();
      ExprPtr e = node(Expr::Kind::Neg, op);
      e->lhs = factor();
      return e;
    }
    ExprPtr e = atom();
    if (at(TokKind::Caret)) {
      Token op = next();
      ExprPtr p = node(Expr::Kind::Pow, op);
      p->exponent = exponent();
      p->lhs = std::move(e);
      return p;
    }
    return e;
  }

  ExprPtr atom() {
    if (at(TokKind::Number)) {
      Token t = next();
      ExprPtr e = node(Expr::Kind::Number, t);
      e->text = t.text;
      return e;
    }
    if (at(TokKind::Ident)) {
      Token t = next();
      ExprPtr e = node(Expr::Kind::Unit, t);
      e->text = t.text;
      return e;
    }
    if (at(TokKind::LParen)) {
      next();
      ExprPtr e = expr();
      if (!at(TokKind::RParen)) fail("expected ')'");
      next();
      return e;
    }
    fail("expected expression");
  }

  /// A literal rational, optionally negative, optionally parenthesized.
  /// Decimal NUMBER tokens are rejected here: exponents are p or p/q.
  Rational exponent() {
    bool paren = false;
    if (at(TokKind::LParen)) {
      paren = true;
      next();
    }
    bool negate = false;
    if (at(TokKind::Minus)) {
      negate = true;
      next();
    }
    if (!at(TokKind::Number)) fail("expected a rational exponent");
    Token t = next();
    if (t.text.find('.') != std::string::npos)
      throw SyntaxError("exponent must be an integer or a fraction", t.line,
                        t.col);
    std::string text = t.text;
    if (text.find('/') == std::string::npos && at(TokKind::Slash)) {
      next();
      if (!at(TokKind::Number)) fail("expected a denominator");
      Token d = next();
      if (d.text.find_first_of("./") != std::string::npos)
        throw SyntaxError("exponent must be an integer or a fraction", d.line,
                          d.col);
      text += "/" + d.text;
    }
    auto r = Rational::parse(text);
    if (!r) throw SyntaxError("invalid exponent", t.line, t.col);
    if (paren) {
      if (!at(TokKind::RParen)) fail("expected ')'");
      next();
    }
    return negate ? -*r : *r;
  }
};

}  // namespace

ExprPtr parse_expression(const std::string& input) {
  return Parser(tokenize(input)).run();
}

}  // namespace qcalc
