#include "heisenberg/expression.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace heis {

ParseError::ParseError(const std::string& message, SourcePos pos)
    : std::runtime_error(message + " at line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column)),
      message_(message), pos_(pos) {}

namespace {

// ---------------------------------------------------------------- lexer

enum class Tok { number, ident, plus, minus, star, starstar, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  SourcePos pos;
};

class Lexer {
public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    skip_space();
    Token tok;
    tok.pos = pos_;
    if (i_ >= s_.size()) return tok;
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && i_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_ + 1])))) {
      tok.kind = Tok::number;
      bool seen_dot = false;
      while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || (s_[i_] == '.' && !seen_dot))) {
        seen_dot = seen_dot || s_[i_] == '.';
        tok.text += advance();
      }
      return tok;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok.kind = Tok::ident;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) tok.text += advance();
      return tok;
    }
    tok.text = std::string(1, advance());
    switch (c) {
    case '+': tok.kind = Tok::plus; break;
    case '-': tok.kind = Tok::minus; break;
    case '*':
      if (i_ < s_.size() && s_[i_] == '*') {
        tok.text += advance();
        tok.kind = Tok::starstar;
      } else {
        tok.kind = Tok::star;
      }
      break;
    case '/': tok.kind = Tok::slash; break;
    case '^': tok.kind = Tok::caret; break;
    case '(': tok.kind = Tok::lparen; break;
    case ')': tok.kind = Tok::rparen; break;
    default: throw ParseError("unexpected character '" + tok.text + "'", tok.pos);
    }
    return tok;
  }

private:
  char advance() {
    const char c = s_[i_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }
  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) advance();
  }

  std::string_view s_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

// ---------------------------------------------------------------- parser

class Parser {
public:
  explicit Parser(std::string_view s) : lex_(s) { tok_ = lex_.next(); }

  Syntax parse_all() {
    Syntax e = expr();
    if (tok_.kind != Tok::end) throw ParseError("unexpected '" + tok_.text + "'", tok_.pos);
    return e;
  }

private:
  Token take() {
    Token t = tok_;
    tok_ = lex_.next();
    return t;
  }

  static Syntax binary(Syntax::Kind kind, Syntax a, Syntax b, SourcePos pos) {
    Syntax s;
    s.kind = kind;
    s.pos = pos;
    s.children.push_back(std::move(a));
    s.children.push_back(std::move(b));
    return s;
  }

  Syntax expr() {
    Syntax left = term();
    while (tok_.kind == Tok::plus || tok_.kind == Tok::minus) {
      const Token op = take();
      left = binary(op.kind == Tok::plus ? Syntax::Kind::add : Syntax::Kind::sub, std::move(left), term(), op.pos);
    }
    return left;
  }

  Syntax term() {
    Syntax left = unary();
    while (tok_.kind == Tok::star || tok_.kind == Tok::slash || tok_.kind == Tok::caret) {
      const Token op = take();
      const auto kind = op.kind == Tok::star ? Syntax::Kind::mul : op.kind == Tok::slash ? Syntax::Kind::div : Syntax::Kind::wedge;
      left = binary(kind, std::move(left), unary(), op.pos);
    }
    return left;
  }

  Syntax unary() {
    if (tok_.kind == Tok::minus) {
      Syntax s;
      s.kind = Syntax::Kind::neg;
      s.pos = take().pos;
      s.children.push_back(unary());
      return s;
    }
    return power();
  }

  Syntax power() {
    Syntax base = atom();
    if (tok_.kind != Tok::starstar) return base;
    const Token op = take();
    if (tok_.kind != Tok::number || tok_.text.find('.') != std::string::npos)
      throw ParseError("'**' needs a non-negative integer exponent", tok_.pos);
    const Token e = take();
    if (e.text.size() > 3) throw ParseError("exponent too large", e.pos);
    Syntax s;
    s.kind = Syntax::Kind::power;
    s.pos = op.pos;
    s.exponent = std::stoi(e.text);
    s.children.push_back(std::move(base));
    return s;
  }

  Syntax atom() {
    if (tok_.kind == Tok::number) {
      const Token t = take();
      Syntax s;
      s.kind = Syntax::Kind::number;
      s.pos = t.pos;
      s.value = parse_rational(t.text);
      return s;
    }
    if (tok_.kind == Tok::ident) {
      const Token t = take();
      Syntax s;
      s.pos = t.pos;
      s.name = t.text;
      if (tok_.kind == Tok::lparen) {
        take();
        s.kind = Syntax::Kind::call;
        s.children.push_back(expr());
        expect_rparen();
      } else {
        s.kind = Syntax::Kind::ident;
      }
      return s;
    }
    if (tok_.kind == Tok::lparen) {
      take();
      Syntax s = expr();
      expect_rparen();
      return s;
    }
    if (tok_.kind == Tok::end) throw ParseError("unexpected end of input", tok_.pos);
    throw ParseError("unexpected '" + tok_.text + "'", tok_.pos);
  }

  void expect_rparen() {
    if (tok_.kind != Tok::rparen) throw ParseError("expected ')'", tok_.pos);
    take();
  }

  Lexer lex_;
  Token tok_;
};

// ---------------------------------------------------------------- forms

std::optional<PolyForm> form_ident(int n, const std::string& name) {
  const int d = 2 * n + 1;
  if (name == "theta") return PolyForm::from_covector(theta(n));
  if (name == "t") return PolyForm::scalar(n, coord::t_poly(n));
  if (n == 1) {
    if (name == "x") return PolyForm::scalar(n, coord::x_poly(1, 1));
    if (name == "y") return PolyForm::scalar(n, coord::y_poly(1, 1));
    if (name == "dx") return PolyForm::from_covector(dx(1, 1));
    if (name == "dy") return PolyForm::from_covector(dy(1, 1));
  }
  for (const char* prefix : {"dx", "dy", "x", "y"}) {
    const std::string p(prefix);
    if (name.size() <= p.size() || name.compare(0, p.size(), p) != 0) continue;
    const std::string digits = name.substr(p.size());
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      continue;
    if (digits.size() > 2) return std::nullopt;
    const int j = std::stoi(digits);
    if (j < 1 || j > n) return std::nullopt;
    if (p == "dx") return PolyForm::from_covector(dx(n, j));
    if (p == "dy") return PolyForm::from_covector(dy(n, j));
    if (p == "x") return PolyForm::scalar(n, Polynomial::variable(d, coord::x(n, j)));
    return PolyForm::scalar(n, Polynomial::variable(d, coord::y(n, j)));
  }
  return std::nullopt;
}

PolyForm interpret_form(int n, const Syntax& s) {
  const int d = 2 * n + 1;
  switch (s.kind) {
  case Syntax::Kind::number: return PolyForm::scalar(n, Polynomial::constant(d, s.value));
  case Syntax::Kind::ident: {
    auto f = form_ident(n, s.name);
    if (!f) throw ParseError("unknown symbol '" + s.name + "'", s.pos);
    return *f;
  }
  case Syntax::Kind::call: throw ParseError("functions are not allowed in polynomial forms", s.pos);
  case Syntax::Kind::neg: return -interpret_form(n, s.children[0]);
  case Syntax::Kind::add:
  case Syntax::Kind::sub: {
    PolyForm a = interpret_form(n, s.children[0]);
    PolyForm b = interpret_form(n, s.children[1]);
    if (a.degree() != b.degree()) {
      if (a.is_zero()) a = PolyForm(n, b.degree());
      else if (b.is_zero()) b = PolyForm(n, a.degree());
      else throw ParseError("adding forms of degrees " + std::to_string(a.degree()) + " and " + std::to_string(b.degree()), s.pos);
    }
    return s.kind == Syntax::Kind::add ? a + b : a - b;
  }
  case Syntax::Kind::mul: {
    const PolyForm a = interpret_form(n, s.children[0]);
    const PolyForm b = interpret_form(n, s.children[1]);
    if (a.degree() == 0) return a.coefficient(0) * b;
    if (b.degree() == 0) return b.coefficient(0) * a;
    throw ParseError("'*' needs a function on one side; use '^' to wedge forms", s.pos);
  }
  case Syntax::Kind::wedge: return wedge(interpret_form(n, s.children[0]), interpret_form(n, s.children[1]));
  case Syntax::Kind::div: {
    const PolyForm a = interpret_form(n, s.children[0]);
    const PolyForm b = interpret_form(n, s.children[1]);
    if (b.degree() != 0 || !b.coefficient(0).is_constant() || b.is_zero())
      throw ParseError("division only by a nonzero constant", s.pos);
    return Rational(1 / b.coefficient(0).constant_term()) * a;
  }
  case Syntax::Kind::power: {
    const PolyForm a = interpret_form(n, s.children[0]);
    if (a.degree() != 0) throw ParseError("'**' applies to functions only", s.pos);
    return PolyForm::scalar(n, pow(a.coefficient(0), static_cast<unsigned>(s.exponent)));
  }
  }
  throw ParseError("unsupported syntax", s.pos);
}

// ---------------------------------------------------------------- intervals

Interval pad(Interval v) {
  const double e = 1e-12;
  return {v.lo - e * (1 + std::fabs(v.lo)), v.hi + e * (1 + std::fabs(v.hi))};
}

Interval imul(Interval a, Interval b) {
  const double p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval ipow(Interval a, int e) {
  if (e == 0) return {1, 1};
  const double l = std::pow(a.lo, e), h = std::pow(a.hi, e);
  if (e % 2 == 1) return {l, h};
  if (a.lo >= 0) return {l, h};
  if (a.hi <= 0) return {h, l};
  return {0, std::max(l, h)};
}

Interval isin(Interval a) {
  constexpr double two_pi = 2 * std::numbers::pi;
  if (!(a.hi - a.lo < two_pi)) return {-1, 1};
  double lo = std::min(std::sin(a.lo), std::sin(a.hi));
  double hi = std::max(std::sin(a.lo), std::sin(a.hi));
  // peaks at pi/2 + 2k pi, troughs at -pi/2 + 2k pi
  const double kmax = std::ceil((a.lo - std::numbers::pi / 2) / two_pi);
  if (std::numbers::pi / 2 + kmax * two_pi <= a.hi) hi = 1;
  const double kmin = std::ceil((a.lo + std::numbers::pi / 2) / two_pi);
  if (-std::numbers::pi / 2 + kmin * two_pi <= a.hi) lo = -1;
  return {lo, hi};
}

} // namespace

Syntax parse_syntax(std::string_view text) { return Parser(text).parse_all(); }

PolyForm parse_form(int n, std::string_view text) { return interpret_form(n, parse_syntax(text)); }

// ---------------------------------------------------------------- Expr

Expr Expr::constant(const Rational& c) {
  auto node = std::make_shared<Node>();
  node->op = Op::constant;
  node->value = c;
  return Expr(std::move(node));
}

Expr Expr::variable(int index) {
  auto node = std::make_shared<Node>();
  node->op = Op::variable;
  node->index = index;
  return Expr(std::move(node));
}

Expr Expr::from_polynomial(const Polynomial& p) {
  Expr out = constant(0);
  for (const auto& [e, c] : p.terms()) {
    Expr term = constant(c);
    for (int i = 0; i < p.nvars(); ++i)
      if (e[static_cast<std::size_t>(i)] != 0) term = term * power(variable(i), e[static_cast<std::size_t>(i)]);
    out = out + term;
  }
  return out;
}

bool Expr::is_constant_zero() const { return op() == Op::constant && sgn(value()) == 0; }

Expr Expr::make(Op op, std::vector<Expr> args, SourcePos pos) {
  auto is_const = [](const Expr& e) { return e.op() == Op::constant; };
  auto is_one = [&](const Expr& e) { return is_const(e) && e.value() == 1; };
  switch (op) {
  case Op::add:
    if (args[0].is_constant_zero()) return args[1];
    if (args[1].is_constant_zero()) return args[0];
    if (is_const(args[0]) && is_const(args[1])) return constant(args[0].value() + args[1].value());
    break;
  case Op::sub:
    if (args[1].is_constant_zero()) return args[0];
    if (is_const(args[0]) && is_const(args[1])) return constant(args[0].value() - args[1].value());
    break;
  case Op::mul:
    if (args[0].is_constant_zero() || args[1].is_constant_zero()) return constant(0);
    if (is_one(args[0])) return args[1];
    if (is_one(args[1])) return args[0];
    if (is_const(args[0]) && is_const(args[1])) return constant(args[0].value() * args[1].value());
    break;
  case Op::div:
    if (args[1].is_constant_zero()) throw ParseError("division by zero", pos);
    if (args[0].is_constant_zero()) return constant(0);
    if (is_one(args[1])) return args[0];
    if (is_const(args[0]) && is_const(args[1])) return constant(args[0].value() / args[1].value());
    break;
  case Op::neg:
    if (is_const(args[0])) return constant(-args[0].value());
    break;
  default: break;
  }
  auto node = std::make_shared<Node>();
  node->op = op;
  node->args = std::move(args);
  node->pos = pos;
  return Expr(std::move(node));
}

Expr Expr::power(const Expr& base, int exponent, SourcePos pos) {
  if (exponent < 0) throw ParseError("negative exponent", pos);
  if (exponent == 0) return constant(1);
  if (exponent == 1) return base;
  if (base.op() == Op::constant) return constant(heis::pow(base.value(), static_cast<unsigned>(exponent)));
  auto node = std::make_shared<Node>();
  node->op = Op::pow;
  node->exponent = exponent;
  node->args = {base};
  node->pos = pos;
  return Expr(std::move(node));
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::add, {a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::sub, {a, b}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::mul, {a, b}); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::div, {a, b}); }
Expr operator-(const Expr& a) { return Expr::make(Expr::Op::neg, {a}); }

Expr Expr::compile(const Syntax& s, const std::vector<std::string>& variables) {
  switch (s.kind) {
  case Syntax::Kind::number: return constant(s.value);
  case Syntax::Kind::ident: {
    auto it = std::find(variables.begin(), variables.end(), s.name);
    if (it == variables.end()) throw ParseError("unknown variable '" + s.name + "'", s.pos);
    auto node = std::make_shared<Node>();
    node->op = Op::variable;
    node->index = static_cast<int>(it - variables.begin());
    node->pos = s.pos;
    return Expr(std::move(node));
  }
  case Syntax::Kind::call: {
    static const std::pair<const char*, Op> functions[] = {{"sin", Op::sin}, {"cos", Op::cos}, {"exp", Op::exp}, {"sqrt", Op::sqrt}};
    for (const auto& [name, op] : functions)
      if (s.name == name) return make(op, {compile(s.children[0], variables)}, s.pos);
    throw ParseError("unknown function '" + s.name + "'", s.pos);
  }
  case Syntax::Kind::add: return make(Op::add, {compile(s.children[0], variables), compile(s.children[1], variables)}, s.pos);
  case Syntax::Kind::sub: return make(Op::sub, {compile(s.children[0], variables), compile(s.children[1], variables)}, s.pos);
  case Syntax::Kind::mul: return make(Op::mul, {compile(s.children[0], variables), compile(s.children[1], variables)}, s.pos);
  case Syntax::Kind::div: return make(Op::div, {compile(s.children[0], variables), compile(s.children[1], variables)}, s.pos);
  case Syntax::Kind::neg: return make(Op::neg, {compile(s.children[0], variables)}, s.pos);
  case Syntax::Kind::power: return power(compile(s.children[0], variables), s.exponent, s.pos);
  case Syntax::Kind::wedge: throw ParseError("'^' is the wedge product and has no meaning here; use '**' for powers", s.pos);
  }
  throw ParseError("unsupported syntax", s.pos);
}

Expr parse_expression(std::string_view text, const std::vector<std::string>& variables) {
  return Expr::compile(parse_syntax(text), variables);
}

double Expr::evaluate(const std::vector<double>& p) const {
  switch (op()) {
  case Op::constant: return value().get_d();
  case Op::variable: return p.at(static_cast<std::size_t>(index()));
  case Op::add: return args()[0].evaluate(p) + args()[1].evaluate(p);
  case Op::sub: return args()[0].evaluate(p) - args()[1].evaluate(p);
  case Op::mul: return args()[0].evaluate(p) * args()[1].evaluate(p);
  case Op::div: return args()[0].evaluate(p) / args()[1].evaluate(p);
  case Op::neg: return -args()[0].evaluate(p);
  case Op::pow: return std::pow(args()[0].evaluate(p), exponent());
  case Op::sin: return std::sin(args()[0].evaluate(p));
  case Op::cos: return std::cos(args()[0].evaluate(p));
  case Op::exp: return std::exp(args()[0].evaluate(p));
  case Op::sqrt: return std::sqrt(args()[0].evaluate(p));
  }
  return 0;
}

Interval Expr::evaluate(const std::vector<Interval>& box) const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (op()) {
  case Op::constant: {
    const double v = value().get_d();
    return pad({v, v});
  }
  case Op::variable: return box.at(static_cast<std::size_t>(index()));
  case Op::add: {
    const Interval a = args()[0].evaluate(box), b = args()[1].evaluate(box);
    return pad({a.lo + b.lo, a.hi + b.hi});
  }
  case Op::sub: {
    const Interval a = args()[0].evaluate(box), b = args()[1].evaluate(box);
    return pad({a.lo - b.hi, a.hi - b.lo});
  }
  case Op::mul: return pad(imul(args()[0].evaluate(box), args()[1].evaluate(box)));
  case Op::div: {
    const Interval b = args()[1].evaluate(box);
    if (b.lo <= 0 && b.hi >= 0) return {-inf, inf};
    return pad(imul(args()[0].evaluate(box), {1 / b.hi, 1 / b.lo}));
  }
  case Op::neg: {
    const Interval a = args()[0].evaluate(box);
    return {-a.hi, -a.lo};
  }
  case Op::pow: return pad(ipow(args()[0].evaluate(box), exponent()));
  case Op::sin: return pad(isin(args()[0].evaluate(box)));
  case Op::cos: {
    const Interval a = args()[0].evaluate(box);
    return pad(isin({a.lo + std::numbers::pi / 2, a.hi + std::numbers::pi / 2}));
  }
  case Op::exp: {
    const Interval a = args()[0].evaluate(box);
    return pad({std::exp(a.lo), std::exp(a.hi)});
  }
  case Op::sqrt: {
    const Interval a = args()[0].evaluate(box);
    return pad({std::sqrt(std::max(a.lo, 0.0)), std::sqrt(std::max(a.hi, 0.0))});
  }
  }
  return {-inf, inf};
}

Expr Expr::derivative(int var) const {
  const auto& a = args();
  switch (op()) {
  case Op::constant: return constant(0);
  case Op::variable: return constant(index() == var ? 1 : 0);
  case Op::add: return a[0].derivative(var) + a[1].derivative(var);
  case Op::sub: return a[0].derivative(var) - a[1].derivative(var);
  case Op::mul: return a[0].derivative(var) * a[1] + a[0] * a[1].derivative(var);
  case Op::div: return (a[0].derivative(var) * a[1] - a[0] * a[1].derivative(var)) / power(a[1], 2);
  case Op::neg: return -a[0].derivative(var);
  case Op::pow: return constant(exponent()) * power(a[0], exponent() - 1) * a[0].derivative(var);
  case Op::sin: return make(Op::cos, {a[0]}, pos()) * a[0].derivative(var);
  case Op::cos: return -(make(Op::sin, {a[0]}, pos()) * a[0].derivative(var));
  case Op::exp: return *this * a[0].derivative(var);
  case Op::sqrt: return a[0].derivative(var) / (constant(2) * *this);
  }
  return constant(0);
}

Expr Expr::substitute(const std::vector<Expr>& values) const {
  switch (op()) {
  case Op::constant: return *this;
  case Op::variable: return values.at(static_cast<std::size_t>(index()));
  case Op::pow: return power(args()[0].substitute(values), exponent(), pos());
  default: break;
  }
  std::vector<Expr> sub;
  for (const auto& a : args()) sub.push_back(a.substitute(values));
  return make(op(), std::move(sub), pos());
}

std::optional<Polynomial> Expr::to_polynomial(int nvars) const {
  switch (op()) {
  case Op::constant: return Polynomial::constant(nvars, value());
  case Op::variable:
    if (index() >= nvars) return std::nullopt;
    return Polynomial::variable(nvars, index());
  case Op::add:
  case Op::sub:
  case Op::mul: {
    auto a = args()[0].to_polynomial(nvars);
    auto b = args()[1].to_polynomial(nvars);
    if (!a || !b) return std::nullopt;
    if (op() == Op::add) return *a + *b;
    if (op() == Op::sub) return *a - *b;
    return *a * *b;
  }
  case Op::div: {
    auto a = args()[0].to_polynomial(nvars);
    auto b = args()[1].to_polynomial(nvars);
    if (!a || !b || !b->is_constant() || b->is_zero()) return std::nullopt;
    return Rational(1 / b->constant_term()) * *a;
  }
  case Op::neg: {
    auto a = args()[0].to_polynomial(nvars);
    if (!a) return std::nullopt;
    return -*a;
  }
  case Op::pow: {
    auto a = args()[0].to_polynomial(nvars);
    if (!a) return std::nullopt;
    return pow(*a, static_cast<unsigned>(exponent()));
  }
  default: return std::nullopt;
  }
}

std::string Expr::to_string(const std::vector<std::string>& variables) const {
  auto var = [&](int i) {
    return i < static_cast<int>(variables.size()) ? variables[static_cast<std::size_t>(i)] : "u" + std::to_string(i + 1);
  };
  const auto& a = args();
  switch (op()) {
  case Op::constant: return sgn(value()) < 0 ? "(" + value().get_str() + ")" : value().get_str();
  case Op::variable: return var(index());
  case Op::add: return "(" + a[0].to_string(variables) + " + " + a[1].to_string(variables) + ")";
  case Op::sub: return "(" + a[0].to_string(variables) + " - " + a[1].to_string(variables) + ")";
  case Op::mul: return a[0].to_string(variables) + "*" + a[1].to_string(variables);
  case Op::div: return a[0].to_string(variables) + "/(" + a[1].to_string(variables) + ")";
  case Op::neg: return "-(" + a[0].to_string(variables) + ")";
  case Op::pow: return "(" + a[0].to_string(variables) + ")**" + std::to_string(exponent());
  case Op::sin: return "sin(" + a[0].to_string(variables) + ")";
  case Op::cos: return "cos(" + a[0].to_string(variables) + ")";
  case Op::exp: return "exp(" + a[0].to_string(variables) + ")";
  case Op::sqrt: return "sqrt(" + a[0].to_string(variables) + ")";
  }
  return "?";
}

namespace {

struct Condition {
  Expr expr;
  bool strictly_positive; // sqrt argument; otherwise a divisor that must avoid 0
  SourcePos pos;
};

void collect_conditions(const Expr& e, std::vector<Condition>& out) {
  for (const auto& a : e.args()) collect_conditions(a, out);
  if (e.op() == Expr::Op::sqrt) out.push_back({e.args()[0], true, e.pos()});
  if (e.op() == Expr::Op::div && e.args()[1].op() != Expr::Op::constant) out.push_back({e.args()[1], false, e.pos()});
}

bool proven(const Condition& c, const Interval& v) {
  return c.strictly_positive ? v.lo > 0 : (v.lo > 0 || v.hi < 0);
}

bool prove_on(const Condition& c, std::vector<Interval> box, int depth, long& budget) {
  if (proven(c, c.expr.evaluate(box))) return true;
  if (depth == 0 || --budget <= 0) return false;
  std::size_t widest = 0;
  for (std::size_t i = 1; i < box.size(); ++i)
    if (box[i].hi - box[i].lo > box[widest].hi - box[widest].lo) widest = i;
  if (box.empty()) return false;
  const Interval whole = box[widest];
  const double mid = 0.5 * (whole.lo + whole.hi);
  box[widest] = {whole.lo, mid};
  if (!prove_on(c, box, depth - 1, budget)) return false;
  box[widest] = {mid, whole.hi};
  return prove_on(c, box, depth - 1, budget);
}

} // namespace

void check_smooth_on(const Expr& e, const std::vector<Interval>& box) {
  std::vector<Condition> conditions;
  collect_conditions(e, conditions);
  for (const auto& c : conditions) {
    long budget = 1 << 16;
    if (!prove_on(c, box, 24, budget))
      throw ParseError(c.strictly_positive ? "sqrt argument is not provably positive on the domain"
                                           : "divisor is not provably nonzero on the domain",
                       c.pos);
  }
}

} // namespace heis
