#include "heisenberg/currents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

namespace heis {

namespace {

// All minors det(J[rows in mask], columns k-|mask| .. k-1), indexed by mask.
// The k-row minors therefore use every column.
template <typename T>
std::vector<T> all_minors(const std::vector<std::vector<T>>& J, int k, const T& one, const T& zero) {
  const int rows = static_cast<int>(J.size());
  std::vector<T> minor(std::size_t{1} << rows, zero);
  minor[0] = one;
  for (int s = 1; s <= k; ++s) {
    const auto col = static_cast<std::size_t>(k - s);
    for (Mask m = 1; m < (Mask{1} << rows); ++m) {
      if (monomial::degree(m) != s) continue;
      T acc = zero;
      int i = 0;
      for (int r = 0; r < rows; ++r) {
        if ((m & (Mask{1} << r)) == 0) continue;
        const T& sub = minor[m & ~(Mask{1} << r)];
        T term = J[static_cast<std::size_t>(r)][col] * sub;
        if (i % 2 == 0) acc += term;
        else acc -= term;
        ++i;
      }
      minor[m] = acc;
    }
  }
  return minor;
}

int effective_order(const ParamSimplex& s, const QuadratureSpec& rule) { return rule.order.value_or(s.quadrature_order()); }

double piece_weight(const Chain::Piece& p) {
  return static_cast<double>(p.coefficient) * static_cast<double>(p.simplex.multiplicity());
}

Rational piece_weight_exact(const Chain::Piece& p) {
  return Rational(p.coefficient) * Rational(p.simplex.multiplicity());
}

void check_pairing(const Chain& T, const PolyForm& omega) {
  if (omega.rank() != T.rank()) throw std::invalid_argument("chain and form live on groups of different rank");
  if (omega.degree() != T.dim())
    throw std::invalid_argument("pairing a " + std::to_string(T.dim()) + "-chain with a " +
                                std::to_string(omega.degree()) + "-form");
}

// Pullback f^* omega as a polynomial in the parameters.
Polynomial exact_pullback(const ParamSimplex& s, const PolyForm& omega) {
  const int k = s.dim();
  const auto J = s.frame_jacobian_exact();
  const auto minors = all_minors(J, k, Polynomial::constant(k, 1), Polynomial(k));
  Polynomial integrand(k);
  for (const auto& [m, f] : omega.terms()) {
    const Polynomial& det = minors[m];
    if (det.is_zero()) continue;
    integrand += f.compose(*s.polynomial_map()) * det;
  }
  return integrand;
}

Rational integrate_exact(const ParamSimplex& s, const Polynomial& p) {
  return s.domain() == Domain::cube ? p.integrate_cube() : p.integrate_simplex();
}

double numeric_pair(const Chain& T, const PolyForm& omega, const QuadratureSpec& rule, int extra_order) {
  double total = 0;
  for (const auto& piece : T.pieces()) {
    const auto& s = piece.simplex;
    const int k = s.dim();
    const QuadratureRule q = make_rule(s.domain(), k, effective_order(s, rule) + extra_order);
    double acc = 0;
    for (std::size_t node = 0; node < q.points.size(); ++node) {
      const auto& u = q.points[node];
      const auto p = s.point(u);
      const auto minors = all_minors(s.frame_jacobian(u), k, 1.0, 0.0);
      double v = 0;
      for (const auto& [m, f] : omega.terms()) v += f.evaluate(p) * minors[m];
      acc += q.weights[node] * v;
    }
    total += piece_weight(piece) * acc;
  }
  return total;
}

} // namespace

std::vector<double> tangent_covector(const ParamSimplex& s, const std::vector<double>& u) {
  const auto minors = all_minors(s.frame_jacobian(u), s.dim(), 1.0, 0.0);
  std::vector<double> tau;
  for (Mask m : monomial::basis(s.rank(), s.dim())) tau.push_back(minors[m]);
  return tau;
}

Rational pair_exact(const Chain& T, const PolyForm& omega) {
  check_pairing(T, omega);
  Rational total = 0;
  for (const auto& piece : T.pieces()) {
    if (!piece.simplex.is_polynomial()) throw std::invalid_argument("exact pairing needs polynomial maps");
    total += piece_weight_exact(piece) * integrate_exact(piece.simplex, exact_pullback(piece.simplex, omega));
  }
  return total;
}

PairingResult pair(const Chain& T, const PolyForm& omega, QuadratureSpec rule) {
  check_pairing(T, omega);
  PairingResult r;
  if (rule.prefer_exact && T.is_polynomial()) {
    r.exact = pair_exact(T, omega);
    r.value = r.exact->get_d();
    return r;
  }
  r.value = numeric_pair(T, omega, rule, 0);
  r.error_estimate = std::fabs(r.value - numeric_pair(T, omega, rule, 4));
  return r;
}

// ------------------------------------------------------------------ masses

namespace {

// |projection of e onto the column span of J| by modified Gram-Schmidt with
// one reorthogonalization pass; numerically dependent columns are dropped.
double projected_norm(const std::vector<std::vector<double>>& J, std::size_t e) {
  const std::size_t rows = J.size();
  const std::size_t k = rows == 0 ? 0 : J[0].size();
  double scale = 0;
  for (const auto& row : J)
    for (double v : row) scale = std::max(scale, std::fabs(v));
  std::vector<std::vector<double>> q;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<double> v(rows);
    for (std::size_t r = 0; r < rows; ++r) v[r] = J[r][c];
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : q) {
        double dot = 0;
        for (std::size_t r = 0; r < rows; ++r) dot += b[r] * v[r];
        for (std::size_t r = 0; r < rows; ++r) v[r] -= dot * b[r];
      }
    double norm = 0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm <= 1e3 * std::numeric_limits<double>::epsilon() * scale) continue;
    for (double& x : v) x /= norm;
    q.push_back(std::move(v));
  }
  double p2 = 0;
  for (const auto& b : q) p2 += b[e] * b[e];
  return std::sqrt(std::min(p2, 1.0));
}

struct Densities {
  double area = 0;
  double oblique = 0;
  double rumin = 0;
};

Densities densities_at(const ParamSimplex& s, const std::vector<double>& u, const std::vector<double>& projector,
                       const std::vector<Mask>& basis) {
  const int k = s.dim();
  const int n = s.rank();
  Densities d;
  if (k == 0) {
    d.area = 1;
    d.rumin = 1;
    return d;
  }
  const auto J = s.frame_jacobian(u);
  const auto minors = all_minors(J, k, 1.0, 0.0);
  // Cauchy-Binet: det(J^T J) is the sum of squared k x k minors
  double det = 0;
  for (Mask m : basis) det += minors[m] * minors[m];
  d.area = std::sqrt(det);
  // the theta-part of the unit tangent k-vector has norm sin(angle to the horizontal)
  d.oblique = d.area * projected_norm(J, static_cast<std::size_t>(2 * n));
  const std::size_t m = basis.size();
  double norm2 = 0;
  for (std::size_t i = 0; i < m; ++i) {
    double acc = 0;
    for (std::size_t j = 0; j < m; ++j) acc += projector[i * m + j] * minors[basis[j]];
    norm2 += acc * acc;
  }
  d.rumin = std::sqrt(norm2);
  return d;
}

Densities integrate_densities(const Chain& T, const QuadratureSpec& rule, int extra_order) {
  Densities total;
  if (T.empty()) return total;
  const auto basis = monomial::basis(T.rank(), T.dim());
  const auto projector = RuminOperators::cached(T.rank()).pi_E0().block(T.dim())->matrix.to_double();
  for (const auto& piece : T.pieces()) {
    const auto& s = piece.simplex;
    const QuadratureRule q = make_rule(s.domain(), s.dim(), effective_order(s, rule) + extra_order);
    Densities acc;
    for (std::size_t node = 0; node < q.points.size(); ++node) {
      const Densities d = densities_at(s, q.points[node], projector, basis);
      acc.area += q.weights[node] * d.area;
      acc.oblique += q.weights[node] * d.oblique;
      acc.rumin += q.weights[node] * d.rumin;
    }
    const double w = std::fabs(piece_weight(piece));
    total.area += w * acc.area;
    total.oblique += w * acc.oblique;
    total.rumin += w * acc.rumin;
  }
  return total;
}

} // namespace

MassReport mass_report(const Chain& T, QuadratureSpec rule) {
  const Densities a = integrate_densities(T, rule, 0);
  const Densities b = integrate_densities(T, rule, 4);
  MassReport r;
  r.riemannian_mass = a.area;
  r.oblique_mass = a.oblique;
  r.rumin_mass = a.rumin;
  r.quadrature_error_estimate =
      std::max({std::fabs(a.area - b.area), std::fabs(a.oblique - b.oblique), std::fabs(a.rumin - b.rumin)});
  r.upper_bound_only = !T.embedded_disjoint;
  return r;
}

double mass(const Chain& T, QuadratureSpec rule) { return integrate_densities(T, rule, 0).area; }
double oblique_mass(const Chain& T, QuadratureSpec rule) { return integrate_densities(T, rule, 0).oblique; }
double rumin_mass(const Chain& T, QuadratureSpec rule) { return integrate_densities(T, rule, 0).rumin; }

ObliquePairingEstimate oblique_mass_by_pairing(const Chain& T, int random_fields, unsigned long seed, QuadratureSpec rule) {
  ObliquePairingEstimate est;
  if (T.empty() || T.dim() == 0) return est;
  const int n = T.rank();
  const int k = T.dim();
  const Mask th = monomial::theta_bit(n);
  const auto hbasis = monomial::basis(n, k - 1, Space::horizontal);
  // theta ^ e_J = sign * e_{J + theta}
  std::vector<int> signs;
  for (Mask J : hbasis) signs.push_back(monomial::wedge_sign(th, J));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<std::vector<double>> fields;
  for (int f = 0; f < random_fields; ++f) {
    std::vector<double> phi(hbasis.size());
    double norm = 0;
    for (auto& c : phi) {
      c = normal(rng);
      norm += c * c;
    }
    norm = std::sqrt(norm);
    for (auto& c : phi) c /= norm;
    fields.push_back(std::move(phi));
  }
  std::vector<double> random_totals(fields.size(), 0.0);
  for (const auto& piece : T.pieces()) {
    const auto& s = piece.simplex;
    const QuadratureRule q = make_rule(s.domain(), k, effective_order(s, rule));
    std::vector<double> acc(fields.size(), 0.0);
    double aligned = 0;
    for (std::size_t node = 0; node < q.points.size(); ++node) {
      const auto minors = all_minors(s.frame_jacobian(q.points[node]), k, 1.0, 0.0);
      std::vector<double> vertical(hbasis.size());
      double norm2 = 0;
      for (std::size_t j = 0; j < hbasis.size(); ++j) {
        vertical[j] = signs[j] * minors[hbasis[j] | th];
        norm2 += vertical[j] * vertical[j];
      }
      aligned += q.weights[node] * std::sqrt(norm2);
      for (std::size_t f = 0; f < fields.size(); ++f) {
        double v = 0;
        for (std::size_t j = 0; j < hbasis.size(); ++j) v += fields[f][j] * vertical[j];
        acc[f] += q.weights[node] * v;
      }
    }
    const double w = piece_weight(piece);
    est.aligned += std::fabs(w) * aligned;
    for (std::size_t f = 0; f < fields.size(); ++f) random_totals[f] += w * acc[f];
  }
  for (double v : random_totals) est.best_random = std::max(est.best_random, std::fabs(v));
  est.best = std::max(est.aligned, est.best_random);
  return est;
}

// ---------------------------------------------------------------- classify

std::string to_string(Status s) {
  switch (s) {
  case Status::holds: return "holds";
  case Status::fails: return "fails";
  case Status::vacuous: return "vacuously true";
  case Status::not_applicable: return "not_applicable";
  }
  return "?";
}

MultiCovector theta_dtheta_power(int n, int p) {
  MultiCovector out = theta(n);
  for (int i = 0; i < p; ++i) out = wedge(out, dtheta(n));
  return out;
}

namespace {

// Coefficients of tau |_ rho, i.e. J -> <tau, rho ^ e_J> over monomials J of
// degree k - deg rho, as linear combinations of tau_I.
struct Contraction {
  std::vector<std::vector<std::pair<Mask, int>>> rows;
};

Contraction contraction(int n, int k, const MultiCovector& rho) {
  Contraction c;
  for (Mask J : monomial::basis(n, k - rho.degree())) {
    std::vector<std::pair<Mask, int>> row;
    for (const auto& [M, coef] : rho.terms()) {
      const int s = monomial::wedge_sign(M, J);
      if (s == 0) continue;
      // rho has integer coefficients in every use here
      row.emplace_back(M | J, s * static_cast<int>(coef.get_num().get_si()));
    }
    c.rows.push_back(std::move(row));
  }
  return c;
}

// Restricting condition: either "T |_ rho = 0" or "T vanishes on horizontal forms".
struct Condition {
  bool horizontal_forms = false;
  MultiCovector rho;
};

double max_abs_coefficient(const Polynomial& p) {
  double m = 0;
  for (const auto& [e, c] : p.terms()) m = std::max(m, std::fabs(c.get_d()));
  return m;
}

// Reduces a boundary by merging faces with identical maps.
Chain reduce_chain(const Chain& T) {
  Chain out(T.rank(), T.dim());
  std::vector<std::pair<std::string, std::size_t>> keys;
  std::vector<long> coeffs;
  std::vector<const ParamSimplex*> simplices;
  for (const auto& piece : T.pieces()) {
    std::string key = piece.simplex.domain() == Domain::cube ? "c" : "s";
    key += std::to_string(piece.simplex.multiplicity()) + ":";
    const auto names = std::vector<std::string>{};
    if (piece.simplex.is_polynomial()) {
      for (const auto& p : *piece.simplex.polynomial_map()) key += to_string(p) + ";";
    } else {
      for (const auto& e : piece.simplex.map()) key += e.to_string() + ";";
    }
    auto it = std::find_if(keys.begin(), keys.end(), [&](const auto& kv) { return kv.first == key; });
    if (it == keys.end()) {
      keys.emplace_back(key, coeffs.size());
      coeffs.push_back(piece.coefficient);
      simplices.push_back(&piece.simplex);
    } else {
      coeffs[it->second] += piece.coefficient;
    }
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) out.add(coeffs[i], *simplices[i]);
  return out;
}

struct Residual {
  double pointwise = 0;
  bool exact = true;
};

Residual pointwise_residual(const Chain& T, const Condition& cond, const QuadratureSpec& rule) {
  Residual res;
  const int n = T.rank();
  const int k = T.dim();
  std::vector<std::vector<std::pair<Mask, int>>> rows;
  if (cond.horizontal_forms) {
    for (Mask I : monomial::basis(n, k, Space::horizontal)) rows.push_back({{I, 1}});
  } else {
    rows = contraction(n, k, cond.rho).rows;
  }
  res.exact = T.is_polynomial();
  for (const auto& piece : T.pieces()) {
    const auto& s = piece.simplex;
    if (res.exact) {
      const auto J = s.frame_jacobian_exact();
      const auto minors = all_minors(J, k, Polynomial::constant(k, 1), Polynomial(k));
      for (const auto& row : rows) {
        Polynomial acc(k);
        for (const auto& [I, c] : row) acc += Rational(c) * minors[I];
        res.pointwise = std::max(res.pointwise, max_abs_coefficient(acc));
      }
    } else {
      const QuadratureRule q = make_rule(s.domain(), k, effective_order(s, rule));
      for (const auto& u : q.points) {
        const auto minors = all_minors(s.frame_jacobian(u), k, 1.0, 0.0);
        for (const auto& row : rows) {
          double acc = 0;
          for (const auto& [I, c] : row) acc += c * minors[I];
          res.pointwise = std::max(res.pointwise, std::fabs(acc));
        }
      }
    }
  }
  return res;
}

long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

// Random test form of the given degree with random affine coefficients.
PolyForm random_test_form(int n, int degree, std::mt19937_64& rng) {
  const int d = 2 * n + 1;
  PolyForm out(n, degree);
  const auto basis = monomial::basis(n, degree);
  if (basis.empty()) return out;
  for (Mask m : basis) {
    Polynomial f = Polynomial::constant(d, draw(rng, -3, 3));
    const int v = static_cast<int>(draw(rng, 0, d - 1));
    f += Rational(draw(rng, -2, 2)) * Polynomial::variable(d, v);
    out.add(m, f);
  }
  return out;
}

PolyForm restricted_test(const Condition& cond, int n, int k, std::mt19937_64& rng) {
  if (cond.horizontal_forms) {
    const int d = 2 * n + 1;
    PolyForm out(n, k);
    for (Mask m : monomial::basis(n, k, Space::horizontal)) {
      Polynomial f = Polynomial::constant(d, draw(rng, -3, 3));
      const long c = draw(rng, -2, 2);
      f += Rational(c) * Polynomial::variable(d, static_cast<int>(draw(rng, 0, d - 1)));
      out.add(m, f);
    }
    return out;
  }
  return wedge(PolyForm::from_covector(cond.rho), random_test_form(n, k - cond.rho.degree(), rng));
}

constexpr int kBatterySize = 3;

double pairing_residual(const Chain& T, const Condition& cond, bool on_boundary, std::mt19937_64& rng,
                        const QuadratureSpec& rule) {
  const int n = T.rank();
  const int k = on_boundary ? T.dim() - 1 : T.dim();
  double worst = 0;
  for (int i = 0; i < kBatterySize; ++i) {
    PolyForm test = restricted_test(cond, n, k, rng);
    // boundary pairings go through Stokes: <dT, w> = <T, dw>
    if (on_boundary) test = exterior_d(test);
    worst = std::max(worst, std::fabs(pair(T, test, rule).value));
  }
  return worst;
}

bool is_vacuous(const Condition& c, int k) { return !c.horizontal_forms && c.rho.degree() > k; }

PredicateResult evaluate_predicate(const Chain& T, const std::vector<Condition>& on_T, const std::vector<Condition>& on_boundary,
                                   double tol, unsigned long seed, const QuadratureSpec& rule) {
  PredicateResult r;
  r.exact = T.is_polynomial();
  const int k = T.dim();
  bool any = false;
  std::mt19937_64 rng(seed);
  for (const auto& c : on_T) {
    if (is_vacuous(c, k)) continue;
    any = true;
    r.pointwise_residual = std::max(r.pointwise_residual, pointwise_residual(T, c, rule).pointwise);
    r.pairing_residual = std::max(r.pairing_residual, pairing_residual(T, c, false, rng, rule));
  }
  if (!on_boundary.empty() && k >= 1) {
    const Chain dT = reduce_chain(boundary(T));
    for (const auto& c : on_boundary) {
      if (is_vacuous(c, k - 1)) continue;
      any = true;
      if (!dT.empty()) r.pointwise_residual = std::max(r.pointwise_residual, pointwise_residual(dT, c, rule).pointwise);
      r.pairing_residual = std::max(r.pairing_residual, pairing_residual(T, c, true, rng, rule));
    }
  }
  if (!any) {
    r.status = Status::vacuous;
    return r;
  }
  const double limit = r.exact ? 0.0 : tol;
  r.status = (r.pointwise_residual <= limit && r.pairing_residual <= limit) ? Status::holds : Status::fails;
  return r;
}

} // namespace

Classification classify(const Chain& T, double tolerance, unsigned long seed) {
  const int n = T.rank();
  const int k = T.dim();
  Classification out;
  QuadratureSpec rule;
  rule.prefer_exact = true;
  double scale = 1;
  if (!T.is_polynomial()) {
    for (const auto& piece : T.pieces()) {
      const QuadratureRule q = make_rule(piece.simplex.domain(), k, piece.simplex.quadrature_order());
      for (const auto& u : q.points)
        for (double v : tangent_covector(piece.simplex, u)) scale = std::max(scale, std::fabs(v));
    }
  }
  out.tolerance = T.is_polynomial() ? 0.0
                  : tolerance > 0   ? tolerance
                                    : std::max(1e-9, 100 * std::numeric_limits<double>::epsilon() * scale);
  if (T.empty()) {
    for (auto* p : {&out.horizontal, &out.vertical, &out.co_legendrian, &out.oblique}) p->status = Status::holds;
    return out;
  }
  out.horizontal = evaluate_predicate(T, {{false, theta(n)}, {false, dtheta(n)}}, {}, out.tolerance, seed, rule);
  out.vertical = evaluate_predicate(T, {{true, MultiCovector(n, 0)}}, {{true, MultiCovector(n, 0)}}, out.tolerance, seed + 1, rule);
  if (k <= n) {
    out.co_legendrian.status = Status::not_applicable;
    out.oblique.status = Status::not_applicable;
    return out;
  }
  const Condition cl{false, theta_dtheta_power(n, k - n)};
  const Condition bcl{false, theta_dtheta_power(n, k - n - 1)};
  out.co_legendrian = evaluate_predicate(T, {cl}, {}, out.tolerance, seed + 2, rule);
  out.oblique = evaluate_predicate(T, {cl}, {bcl}, out.tolerance, seed + 3, rule);
  return out;
}

// ------------------------------------------------------------ smooth currents

SmoothCurrent ff_current(const PolyForm& alpha, const Box& box) {
  if (box.dimension() != 2 * alpha.rank() + 1) throw std::invalid_argument("box dimension does not match the group");
  return {SmoothCurrent::Kind::federer_fleming, alpha, box};
}

SmoothCurrent ru_current(const PolyForm& beta, const Box& box) {
  if (box.dimension() != 2 * beta.rank() + 1) throw std::invalid_argument("box dimension does not match the group");
  return {SmoothCurrent::Kind::rumin, beta, box};
}

Rational ff_pair(const SmoothCurrent& S, const PolyForm& omega) {
  if (omega.rank() != S.rank()) throw std::invalid_argument("current and form live on groups of different rank");
  if (S.form.degree() + omega.degree() != 2 * S.rank() + 1)
    throw std::invalid_argument("pairing needs complementary degrees");
  return integrate_top(wedge(S.form, omega), S.box);
}

namespace {
Rational parity(int k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }
} // namespace

SmoothCurrent boundary(const SmoothCurrent& S) {
  const int k = S.dimension();
  if (k == 0) throw std::invalid_argument("a 0-current has no boundary");
  SmoothCurrent out = S;
  out.form = parity(k) * (S.kind == SmoothCurrent::Kind::federer_fleming ? exterior_d(S.form) : d_c(S.form));
  return out;
}

SmoothCurrent b_operator(const SmoothCurrent& S) {
  if (S.kind != SmoothCurrent::Kind::federer_fleming) throw std::invalid_argument("B acts on Federer-Fleming currents");
  const int h = S.form.degree();
  if (h == 0) throw std::invalid_argument("B would raise the dimension above 2n+1");
  SmoothCurrent out = S;
  out.form = parity(h) * RuminOperators::cached(S.rank()).apply_d0_pinv(S.form);
  return out;
}

SmoothCurrent oblique_correction(const SmoothCurrent& S) {
  SmoothCurrent out = S;
  out.kind = SmoothCurrent::Kind::federer_fleming;
  out.form = pi_E(S.form);
  return out;
}

Classification classify(const SmoothCurrent& S) {
  if (S.kind != SmoothCurrent::Kind::federer_fleming)
    throw std::invalid_argument("classification applies to Federer-Fleming currents");
  const int n = S.rank();
  const int k = S.dimension();
  const PolyForm& alpha = S.form;
  const PolyForm dalpha = exterior_d(alpha);
  Classification out;
  std::mt19937_64 rng(7);

  auto residual_of = [](const PolyForm& f) {
    double m = 0;
    for (const auto& [mask, p] : f.terms()) m = std::max(m, max_abs_coefficient(p));
    return m;
  };
  // T |_ rho = 0 iff alpha ^ rho = 0; the battery pairs with rho ^ phi.
  auto restrict_check = [&](const PolyForm& form, const MultiCovector& rho, int dim, PredicateResult& r) {
    if (rho.degree() > dim) return false;
    r.pointwise_residual = std::max(r.pointwise_residual, residual_of(wedge(form, PolyForm::from_covector(rho))));
    for (int i = 0; i < kBatterySize; ++i) {
      const PolyForm test = wedge(PolyForm::from_covector(rho), bump_multiply(random_test_form(n, dim - rho.degree(), rng), S.box));
      r.pairing_residual = std::max(r.pairing_residual, std::fabs(integrate_top(wedge(form, test), S.box).get_d()));
    }
    return true;
  };
  auto horizontal_forms_check = [&](const PolyForm& form, int dim, PredicateResult& r) {
    for (Mask m : monomial::basis(n, dim, Space::horizontal)) {
      const MultiCovector e = MultiCovector::monomial(n, m);
      r.pointwise_residual = std::max(r.pointwise_residual, residual_of(wedge(form, PolyForm::from_covector(e))));
      const PolyForm test = bump_multiply(PolyForm::from_covector(e), S.box);
      r.pairing_residual = std::max(r.pairing_residual, std::fabs(integrate_top(wedge(form, test), S.box).get_d()));
    }
  };
  auto finish = [](PredicateResult& r, bool any) {
    r.exact = true;
    if (!any) r.status = Status::vacuous;
    else r.status = r.pointwise_residual == 0 && r.pairing_residual == 0 ? Status::holds : Status::fails;
  };

  bool any = restrict_check(alpha, theta(n), k, out.horizontal);
  any = restrict_check(alpha, dtheta(n), k, out.horizontal) || any;
  finish(out.horizontal, any);

  horizontal_forms_check(alpha, k, out.vertical);
  if (k >= 1) horizontal_forms_check(dalpha, k - 1, out.vertical);
  finish(out.vertical, true);

  if (k <= n) {
    out.co_legendrian.status = Status::not_applicable;
    out.oblique.status = Status::not_applicable;
    return out;
  }
  finish(out.co_legendrian, restrict_check(alpha, theta_dtheta_power(n, k - n), k, out.co_legendrian));
  any = restrict_check(alpha, theta_dtheta_power(n, k - n), k, out.oblique);
  any = restrict_check(dalpha, theta_dtheta_power(n, k - n - 1), k - 1, out.oblique) || any;
  finish(out.oblique, any);
  return out;
}

// ----------------------------------------------------------------- functionals

Functional::Functional(int n, int dim, Eval eval, std::string description)
    : n_(n), dim_(dim), eval_(std::move(eval)), description_(std::move(description)) {}

Functional Functional::of(const Chain& T) {
  if (!T.is_polynomial()) throw std::invalid_argument("exact pairing functionals need polynomial chains");
  return Functional(T.rank(), T.dim(), [T](const PolyForm& w) { return pair_exact(T, w); }, "chain");
}

Functional Functional::of(const SmoothCurrent& S) {
  return Functional(S.rank(), S.dimension(), [S](const PolyForm& w) { return ff_pair(S, w); },
                    S.kind == SmoothCurrent::Kind::federer_fleming ? "FF(alpha)" : "Ru(beta)");
}

Rational Functional::operator()(const PolyForm& omega) const {
  if (omega.rank() != n_) throw std::invalid_argument("test form on a group of different rank");
  if (omega.degree() != dim_)
    throw std::invalid_argument("a " + std::to_string(dim_) + "-current paired with a " + std::to_string(omega.degree()) +
                                "-form");
  return eval_(omega);
}

Functional operator+(const Functional& a, const Functional& b) {
  if (a.rank() != b.rank() || a.dim() != b.dim()) throw std::invalid_argument("adding currents of different type");
  return Functional(a.rank(), a.dim(), [a, b](const PolyForm& w) { return Rational(a(w) + b(w)); },
                    "(" + a.description() + " + " + b.description() + ")");
}

Functional operator-(const Functional& a, const Functional& b) {
  if (a.rank() != b.rank() || a.dim() != b.dim()) throw std::invalid_argument("subtracting currents of different type");
  return Functional(a.rank(), a.dim(), [a, b](const PolyForm& w) { return Rational(a(w) - b(w)); },
                    "(" + a.description() + " - " + b.description() + ")");
}

Functional operator*(const Rational& s, const Functional& a) {
  return Functional(a.rank(), a.dim(), [s, a](const PolyForm& w) { return Rational(s * a(w)); },
                    s.get_str() + "*" + a.description());
}

Functional boundary(const Functional& T) {
  if (T.dim() == 0) throw std::invalid_argument("a 0-current has no boundary");
  return Functional(T.rank(), T.dim() - 1, [T](const PolyForm& w) { return T(exterior_d(w)); }, "d" + T.description());
}

Functional b_operator(const Functional& T) {
  if (T.dim() + 1 > 2 * T.rank() + 1) throw std::invalid_argument("B would raise the dimension above 2n+1");
  return Functional(T.rank(), T.dim() + 1,
                    [T](const PolyForm& w) { return T(RuminOperators::cached(T.rank()).apply_d0_pinv(w)); },
                    "B" + T.description());
}

Functional rumin_boundary(const Functional& T) {
  if (T.dim() == 0) throw std::invalid_argument("a 0-current has no boundary");
  return Functional(T.rank(), T.dim() - 1, [T](const PolyForm& g) { return T(d_c(g)); }, "dH" + T.description());
}

namespace {
void require_low(int k, int n) {
  if (k > n)
    throw UnsupportedCorrespondence("in dimension k > n the correspondence acts on a representing form; "
                                    "pass a form-represented current (SmoothCurrent), not a pairing or a chain");
}
void require_high(int k, int n) {
  if (k <= n)
    throw UnsupportedCorrespondence("in dimension k <= n the correspondence acts on pairings; wrap the current "
                                    "with Functional::of");
}
} // namespace

Functional tilde(const Functional& rumin_side) {
  require_low(rumin_side.dim(), rumin_side.rank());
  const Functional T = rumin_side;
  return Functional(T.rank(), T.dim(), [T](const PolyForm& w) { return T(RuminOperators::cached(T.rank()).apply_pi_E0(w)); },
                    "tilde " + T.description());
}

Functional hat(const Functional& ff_side) {
  require_low(ff_side.dim(), ff_side.rank());
  const Functional T = ff_side;
  return Functional(T.rank(), T.dim(), [T](const PolyForm& g) { return T(pi_E(g)); }, "hat " + T.description());
}

Functional tilde(const Chain& rumin_side) {
  require_low(rumin_side.dim(), rumin_side.rank());
  return tilde(Functional::of(rumin_side));
}

Functional hat(const Chain& ff_side) {
  require_low(ff_side.dim(), ff_side.rank());
  return hat(Functional::of(ff_side));
}

SmoothCurrent tilde(const SmoothCurrent& rumin_side) {
  if (rumin_side.kind != SmoothCurrent::Kind::rumin) throw std::invalid_argument("tilde maps Rumin currents");
  require_high(rumin_side.dimension(), rumin_side.rank());
  return {SmoothCurrent::Kind::federer_fleming, pi_E(rumin_side.form), rumin_side.box};
}

SmoothCurrent hat(const SmoothCurrent& ff_side) {
  if (ff_side.kind != SmoothCurrent::Kind::federer_fleming) throw std::invalid_argument("hat maps Federer-Fleming currents");
  require_high(ff_side.dimension(), ff_side.rank());
  return {SmoothCurrent::Kind::rumin, RuminOperators::cached(ff_side.rank()).apply_pi_E0(ff_side.form), ff_side.box};
}

} // namespace heis
