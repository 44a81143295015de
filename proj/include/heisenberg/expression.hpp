#pragma once

#include "heisenberg/poly_form.hpp"
#include "heisenberg/polynomial.hpp"
#include "heisenberg/rational.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace heis {

struct SourcePos {
  int line = 1;
  int column = 1;
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, SourcePos pos);
  int line() const { return pos_.line; }
  int column() const { return pos_.column; }
  /// The message without the position suffix.
  const std::string& message() const { return message_; }

private:
  std::string message_;
  SourcePos pos_;
};

/// Untyped syntax tree produced by the LL(1) parser
///   expr  := term (('+'|'-') term)*
///   term  := unary (('*'|'/'|'^') unary)*
///   unary := '-' unary | power
///   power := atom ('**' integer)?
///   atom  := number | ident | ident '(' expr ')' | '(' expr ')'
/// Numbers are integers or finite decimals; '^' is the wedge product.
struct Syntax {
  enum class Kind { number, ident, call, add, sub, mul, div, wedge, neg, power };
  Kind kind = Kind::number;
  Rational value;   // number
  std::string name; // ident, call
  int exponent = 0; // power
  std::vector<Syntax> children;
  SourcePos pos;
};

Syntax parse_syntax(std::string_view text);

/// Parses a differential form on H^n. Tokens: dx1..dxn, dy1..dyn, theta,
/// coordinates x1..xn, y1..yn, t (for n = 1 also x, y, dx, dy). '*' scales by a
/// function, '^' wedges, '/' divides by a nonzero constant, '**' raises a
/// function to an integer power.
PolyForm parse_form(int n, std::string_view text);

struct Interval {
  double lo = 0;
  double hi = 0;
};

/// Smooth scalar expression in named variables, used for chain maps.
class Expr {
public:
  enum class Op { constant, variable, add, sub, mul, div, neg, pow, sin, cos, exp, sqrt };

  Expr() : Expr(constant(0)) {}

  static Expr constant(const Rational& c);
  static Expr variable(int index);
  static Expr from_polynomial(const Polynomial& p);

  /// Resolves identifiers against `variables`; calls must be sin, cos, exp
  /// or sqrt. Wedge is rejected; '^' is not used here.
  static Expr compile(const Syntax& s, const std::vector<std::string>& variables);

  Op op() const { return node_->op; }
  const Rational& value() const { return node_->value; }
  int index() const { return node_->index; }
  int exponent() const { return node_->exponent; }
  const std::vector<Expr>& args() const { return node_->args; }
  SourcePos pos() const { return node_->pos; }

  double evaluate(const std::vector<double>& point) const;
  Interval evaluate(const std::vector<Interval>& box) const;
  Expr derivative(int var) const;
  Expr substitute(const std::vector<Expr>& values) const;
  /// Exact polynomial when the expression uses only + - * and division by
  /// nonzero constants.
  std::optional<Polynomial> to_polynomial(int nvars) const;
  bool is_constant_zero() const;

  std::string to_string(const std::vector<std::string>& variables = {}) const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);

private:
  struct Node {
    Op op = Op::constant;
    Rational value;
    int index = 0;
    int exponent = 0;
    std::vector<Expr> args;
    SourcePos pos;
  };
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr make(Op op, std::vector<Expr> args, SourcePos pos = {});
  static Expr power(const Expr& base, int exponent, SourcePos pos = {});

  std::shared_ptr<const Node> node_;
};

Expr parse_expression(std::string_view text, const std::vector<std::string>& variables);

/// Proves, by interval arithmetic with adaptive bisection over `box`, that
/// every sqrt argument stays positive and every divisor stays away from zero.
/// Throws ParseError at the offending node otherwise.
void check_smooth_on(const Expr& e, const std::vector<Interval>& box);

} // namespace heis
