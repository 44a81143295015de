#include "heisenberg/random.hpp"

namespace heis {

long Battery::integer(long lo, long hi) {
  return lo + static_cast<long>(rng_() % static_cast<unsigned long>(hi - lo + 1));
}

Rational Battery::rational() {
  const long p = integer(-4, 4);
  return ratio(p, integer(1, 3));
}

Rational Battery::scale() {
  const long p = integer(1, 5);
  return ratio(p, integer(1, 3));
}

Polynomial Battery::polynomial(int nvars, int max_degree, int terms) {
  Polynomial p(nvars);
  for (int i = 0; i < terms; ++i) {
    Exponents e{};
    const int deg = static_cast<int>(integer(0, max_degree));
    for (int j = 0; j < deg; ++j) ++e[static_cast<std::size_t>(integer(0, nvars - 1))];
    p.add_term(e, rational());
  }
  return p;
}

MultiCovector Battery::covector(int n, int degree) {
  MultiCovector a(n, degree);
  for (Mask m : monomial::basis(n, degree))
    if (integer(0, 2) != 0) a.add(m, rational());
  return a;
}

PolyForm Battery::form(int n, int degree, int max_degree) {
  PolyForm a(n, degree);
  const auto basis = monomial::basis(n, degree);
  for (Mask m : basis)
    if (basis.size() <= 2 || integer(0, 2) != 0) a.add(m, polynomial(2 * n + 1, max_degree, 2));
  return a;
}

PolyForm Battery::e0_section(const RuminOperators& ops, int degree, int max_degree) {
  return ops.apply_pi_E0(form(ops.rank(), degree, max_degree));
}

} // namespace heis

namespace heis {

namespace {

Polynomial antiderivative(const Polynomial& p) {
  Polynomial out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    ++f[0];
    out.add_term(f, c / Rational(f[0]));
  }
  return out;
}

std::vector<Expr> to_exprs(const std::vector<Polynomial>& ps) {
  std::vector<Expr> out;
  for (const auto& p : ps) out.push_back(Expr::from_polynomial(p));
  return out;
}

} // namespace

Chain random_polynomial_chain(Battery& b, int n, int dim, int pieces, int max_degree) {
  Chain T(n, dim);
  for (int i = 0; i < pieces; ++i) {
    std::vector<Polynomial> map;
    for (int c = 0; c < 2 * n + 1; ++c) {
      Polynomial p = dim == 0 ? Polynomial::constant(0, b.rational()) : b.polynomial(dim, max_degree, 2);
      if (dim > 0) {
        const long c = b.integer(-1, 1);
        p += Rational(c) * Polynomial::variable(dim, static_cast<int>(b.integer(0, dim - 1)));
      }
      map.push_back(p);
    }
    const Domain dom = b.integer(0, 1) == 0 ? Domain::cube : Domain::simplex;
    T.add(b.integer(-2, 2) == 0 ? 1 : b.integer(-2, 2), ParamSimplex(dim, dom, to_exprs(map)));
  }
  return T;
}

Chain legendrian_curve(Battery& b, int n) {
  std::vector<Polynomial> x, y;
  for (int j = 0; j < n; ++j) x.push_back(b.polynomial(1, 2, 2) + Polynomial::variable(1, 0));
  for (int j = 0; j < n; ++j) y.push_back(b.polynomial(1, 2, 2));
  Polynomial integrand(1);
  for (int j = 0; j < n; ++j) {
    const auto J = static_cast<std::size_t>(j);
    integrand += Rational(1, 2) * (x[J] * y[J].derivative(0) - y[J] * x[J].derivative(0));
  }
  std::vector<Polynomial> map = x;
  map.insert(map.end(), y.begin(), y.end());
  map.push_back(antiderivative(integrand) + Polynomial::constant(1, b.rational()));
  Chain T(n, 1);
  T.add(1, ParamSimplex(1, Domain::cube, to_exprs(map)));
  return T;
}

Chain legendrian_surface(Battery& b, int n) {
  if (n < 2) throw std::invalid_argument("Legendrian surfaces need n >= 2");
  const Polynomial g = b.polynomial(2, 3, 3);
  const Polynomial u = Polynomial::variable(2, 0);
  const Polynomial v = Polynomial::variable(2, 1);
  std::vector<Polynomial> map(static_cast<std::size_t>(2 * n + 1), Polynomial(2));
  map[0] = u;
  map[1] = v;
  map[static_cast<std::size_t>(n)] = g.derivative(0);
  map[static_cast<std::size_t>(n + 1)] = g.derivative(1);
  // remaining x_j, y_j constants: they contribute x_j dy_j - y_j dx_j = 0
  for (int j = 3; j <= n; ++j) {
    map[static_cast<std::size_t>(j - 1)] = Polynomial::constant(2, b.rational());
    map[static_cast<std::size_t>(n + j - 1)] = Polynomial::constant(2, b.rational());
  }
  map[static_cast<std::size_t>(2 * n)] = Rational(1, 2) * (u * g.derivative(0) + v * g.derivative(1)) - g;
  Chain T(n, 2);
  T.add(1, ParamSimplex(2, b.integer(0, 1) == 0 ? Domain::cube : Domain::simplex, to_exprs(map)));
  return T;
}

} // namespace heis
