#include "heisenberg/poly_form.hpp"

#include <stdexcept>

namespace heis {

Box Box::cube(int n, const Rational& half_width) {
  if (sgn(half_width) <= 0) throw std::invalid_argument("box half width must be positive");
  Box b;
  b.lo.assign(static_cast<std::size_t>(2 * n + 1), -half_width);
  b.hi.assign(static_cast<std::size_t>(2 * n + 1), half_width);
  return b;
}

namespace coord {

Polynomial x_poly(int n, int j) { return Polynomial::variable(2 * n + 1, x(n, j)); }
Polynomial y_poly(int n, int j) { return Polynomial::variable(2 * n + 1, y(n, j)); }
Polynomial t_poly(int n) { return Polynomial::variable(2 * n + 1, t(n)); }

std::vector<std::string> names(int n) {
  std::vector<std::string> out;
  for (int j = 1; j <= n; ++j) out.push_back("x" + std::to_string(j));
  for (int j = 1; j <= n; ++j) out.push_back("y" + std::to_string(j));
  out.push_back("t");
  return out;
}

std::vector<int> weights(int n) {
  std::vector<int> w(static_cast<std::size_t>(2 * n + 1), 1);
  w.back() = 2;
  return w;
}

} // namespace coord

Polynomial horiz_derive(int n, const Polynomial& f, FrameField field) {
  if (f.nvars() != 2 * n + 1) throw std::invalid_argument("polynomial is not a function on H^n");
  const Polynomial ft = f.derivative(coord::t(n));
  if (field.kind == FrameField::Z) return ft;
  if (field.index < 1 || field.index > n) throw std::invalid_argument("frame field index out of range");
  const Rational half(1, 2);
  if (field.kind == FrameField::X)
    return f.derivative(coord::x(n, field.index)) - half * (coord::y_poly(n, field.index) * ft);
  return f.derivative(coord::y(n, field.index)) + half * (coord::x_poly(n, field.index) * ft);
}

PolyForm::PolyForm(int n, int degree) : n_(n), degree_(degree) {
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("group rank out of range");
  if (degree < 0) throw std::invalid_argument("form degree out of range");
}

PolyForm PolyForm::from_covector(const MultiCovector& a, const Polynomial& f) {
  PolyForm out(a.rank(), a.degree());
  for (const auto& [m, c] : a.terms()) out.add(m, c * f);
  return out;
}

PolyForm PolyForm::from_covector(const MultiCovector& a) {
  return from_covector(a, Polynomial::constant(2 * a.rank() + 1, 1));
}

PolyForm PolyForm::scalar(int n, const Polynomial& f) {
  PolyForm out(n, 0);
  out.add(0, f);
  return out;
}

Polynomial PolyForm::coefficient(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Polynomial(2 * n_ + 1) : it->second;
}

void PolyForm::add(Mask m, const Polynomial& f) {
  if (monomial::degree(m) != degree_) throw std::invalid_argument("monomial degree mismatch");
  if (f.nvars() != 2 * n_ + 1) throw std::invalid_argument("coefficient is not a function on H^n");
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool PolyForm::is_horizontal() const {
  for (const auto& [m, f] : terms_)
    if (!monomial::is_horizontal(n_, m)) return false;
  return true;
}

bool PolyForm::is_vertical() const {
  for (const auto& [m, f] : terms_)
    if (monomial::is_horizontal(n_, m)) return false;
  return true;
}

void PolyForm::check_compatible(const PolyForm& other) const {
  if (n_ != other.n_) throw std::invalid_argument("forms on groups of different rank");
  if (degree_ != other.degree_) throw std::invalid_argument("forms of different degree");
}

PolyForm& PolyForm::operator+=(const PolyForm& other) {
  check_compatible(other);
  for (const auto& [m, f] : other.terms_) add(m, f);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& other) {
  check_compatible(other);
  for (const auto& [m, f] : other.terms_) add(m, -f);
  return *this;
}

PolyForm& PolyForm::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, f] : terms_) f *= s;
  return *this;
}

PolyForm operator*(const Polynomial& f, const PolyForm& a) {
  PolyForm out(a.n_, a.degree_);
  for (const auto& [m, g] : a.terms_) out.add(m, f * g);
  return out;
}

int PolyForm::coefficient_degree() const {
  int d = -1;
  for (const auto& [m, f] : terms_) d = std::max(d, f.total_degree());
  return d;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("wedge of forms on different groups");
  PolyForm out(a.rank(), a.degree() + b.degree());
  for (const auto& [ma, fa] : a.terms())
    for (const auto& [mb, fb] : b.terms()) {
      const int s = monomial::wedge_sign(ma, mb);
      if (s == 0) continue;
      Polynomial prod = fa * fb;
      if (s < 0) prod *= Rational(-1);
      out.add(ma | mb, prod);
    }
  return out;
}

namespace {

// d of a constant coframe monomial: omega_I = h ^ theta gives (-1)^{deg h} h ^ dtheta.
MultiCovector d_of_monomial(int n, Mask m) {
  if (monomial::is_horizontal(n, m)) return MultiCovector(n, monomial::degree(m) + 1);
  const Mask h = m & ~monomial::theta_bit(n);
  MultiCovector out = wedge(MultiCovector::monomial(n, h), dtheta(n));
  if (monomial::degree(h) % 2 == 1) out *= Rational(-1);
  return out;
}

void add_derivative_terms(const PolyForm& a, int part, PolyForm& out) {
  const int n = a.rank();
  for (const auto& [m, f] : a.terms()) {
    if (part == 0) {
      const MultiCovector dm = d_of_monomial(n, m);
      for (const auto& [mm, c] : dm.terms()) out.add(mm, c * f);
      continue;
    }
    auto add_one = [&](Mask bit, const Polynomial& g) {
      if (g.is_zero()) return;
      const int s = monomial::wedge_sign(bit, m);
      if (s == 0) return;
      out.add(bit | m, s > 0 ? g : -g);
    };
    if (part == 1) {
      for (int j = 1; j <= n; ++j) {
        add_one(Mask{1} << (j - 1), horiz_derive(n, f, {FrameField::X, j}));
        add_one(Mask{1} << (n + j - 1), horiz_derive(n, f, {FrameField::Y, j}));
      }
    } else {
      add_one(monomial::theta_bit(n), horiz_derive(n, f, {FrameField::Z, 0}));
    }
  }
}

} // namespace

PolyForm d_weight_part(const PolyForm& a, int j) {
  if (j < 0 || j > 2) throw std::invalid_argument("weight part must be 0, 1 or 2");
  PolyForm out(a.rank(), a.degree() + 1);
  add_derivative_terms(a, j, out);
  return out;
}

PolyForm exterior_d(const PolyForm& a) {
  PolyForm out(a.rank(), a.degree() + 1);
  for (int j = 0; j <= 2; ++j) add_derivative_terms(a, j, out);
  return out;
}

MultiCovector evaluate_at(const PolyForm& a, const GroupPoint& p) {
  if (p.rank() != a.rank()) throw std::invalid_argument("point and form on different groups");
  const auto c = p.coordinates();
  MultiCovector out(a.rank(), a.degree());
  for (const auto& [m, f] : a.terms()) out.add(m, f.evaluate(c));
  return out;
}

Polynomial bump_polynomial(int n, const Box& box) {
  const int d = 2 * n + 1;
  if (box.dimension() != d) throw std::invalid_argument("box dimension does not match the group");
  Polynomial out = Polynomial::constant(d, 1);
  for (int i = 0; i < d; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (box.lo[k] >= box.hi[k]) throw std::invalid_argument("degenerate box");
    const Polynomial c = Polynomial::variable(d, i);
    const Polynomial factor = (c - Polynomial::constant(d, box.lo[k])) * (Polynomial::constant(d, box.hi[k]) - c);
    out = out * factor * factor;
  }
  return out;
}

PolyForm bump_multiply(const PolyForm& a, const Box& box) { return bump_polynomial(a.rank(), box) * a; }

PolyForm dilation_pullback(const Rational& lambda, const PolyForm& a) {
  if (sgn(lambda) <= 0) throw std::invalid_argument("dilation factor must be positive");
  const int n = a.rank();
  std::vector<Polynomial> subs;
  for (int i = 0; i < 2 * n; ++i) subs.push_back(lambda * Polynomial::variable(2 * n + 1, i));
  subs.push_back((lambda * lambda) * coord::t_poly(n));
  PolyForm out(n, a.degree());
  for (const auto& [m, f] : a.terms())
    out.add(m, pow(lambda, static_cast<unsigned>(monomial::weight(n, m))) * f.compose(subs));
  return out;
}

PolyForm apply_pointwise(const GradedOperator& op, const PolyForm& a) {
  if (op.space() != Space::full || op.rank() != a.rank())
    throw std::invalid_argument("pointwise operator must act on the full algebra of the same group");
  const auto* block = op.block(a.degree());
  if (block == nullptr) throw std::invalid_argument("operator has no block for this degree");
  const auto source = monomial::basis(a.rank(), a.degree());
  const auto target = monomial::basis(a.rank(), block->target_degree);
  PolyForm out(a.rank(), block->target_degree);
  for (std::size_t j = 0; j < source.size(); ++j) {
    auto it = a.terms().find(source[j]);
    if (it == a.terms().end()) continue;
    for (std::size_t i = 0; i < target.size(); ++i) {
      const Rational& c = block->matrix(i, j);
      if (sgn(c) != 0) out.add(target[i], c * it->second);
    }
  }
  return out;
}

Rational integrate_top(const PolyForm& a, const Box& box) {
  if (a.degree() != 2 * a.rank() + 1) throw std::invalid_argument("only top-degree forms integrate over a box");
  if (box.dimension() != 2 * a.rank() + 1) throw std::invalid_argument("box dimension does not match the group");
  return a.coefficient(full_volume(a.rank())).integrate_box(box.lo, box.hi);
}

std::pair<PolyForm, PolyForm> weight_split(const PolyForm& a) {
  PolyForm h(a.rank(), a.degree());
  PolyForm v(a.rank(), a.degree());
  for (const auto& [m, f] : a.terms()) (monomial::is_horizontal(a.rank(), m) ? h : v).add(m, f);
  return {h, v};
}

std::string to_string(const PolyForm& a) {
  if (a.is_zero()) return "0";
  const auto names = coord::names(a.rank());
  std::string s;
  for (const auto& [m, f] : a.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(f, names) + ")";
    if (m != 0) s += " " + monomial::name(a.rank(), m);
  }
  return s;
}

} // namespace heis
