#include "heisenberg/verify.hpp"

#include "heisenberg/currents.hpp"
#include "heisenberg/random.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <functional>
#include <json.hpp>

namespace heis {

int ConformanceReport::passed() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.passed; }));
}

int ConformanceReport::failed() const { return total() - passed(); }

std::string ConformanceReport::to_text() const {
  std::size_t width = 4;
  for (const auto& r : rows) width = std::max(width, r.name.size());
  std::string out;
  for (const auto& r : rows) {
    out += fmt::format("{:<{}}  {}  {:>5}  {}\n", r.name, width, r.passed ? "PASS" : "FAIL", r.instances, r.anchor);
    if (r.counterexample) out += fmt::format("    counterexample: {}\n", *r.counterexample);
  }
  out += fmt::format("{} rows: {} passed, {} failed\n", total(), passed(), failed());
  return out;
}

std::string ConformanceReport::to_json() const {
  nlohmann::ordered_json j;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["name"] = r.name;
    row["anchor"] = r.anchor;
    row["instances"] = r.instances;
    row["status"] = r.passed ? "pass" : "fail";
    row["counterexample"] = r.counterexample ? nlohmann::ordered_json(*r.counterexample) : nlohmann::ordered_json(nullptr);
    j["rows"].push_back(std::move(row));
  }
  j["summary"] = {{"total", total()}, {"passed", passed()}, {"failed", failed()}};
  return j.dump(2) + "\n";
}

namespace {

using Check = std::function<std::optional<std::string>(int)>;

ConformanceRow run_row(std::string name, std::string anchor, int count, const Check& check) {
  ConformanceRow row{std::move(name), std::move(anchor), 0, true, std::nullopt};
  for (int i = 0; i < count; ++i) {
    ++row.instances;
    if (auto bad = check(i)) {
      row.passed = false;
      row.counterexample = std::move(bad);
      break;
    }
  }
  return row;
}

std::optional<std::string> unless(bool ok, const std::function<std::string()>& what) {
  if (ok) return std::nullopt;
  return what();
}

std::string show(const PolyForm& a) { return to_string(a); }

std::string show(const MultiCovector& a) { return to_string(a); }

std::string show(const Chain& T) {
  std::vector<std::string> names;
  for (int j = 1; j <= T.dim(); ++j) names.push_back("u" + std::to_string(j));
  std::vector<std::string> pieces;
  for (const auto& p : T.pieces()) {
    std::vector<std::string> comps;
    for (const auto& e : p.simplex.map()) comps.push_back(e.to_string(names));
    pieces.push_back(fmt::format("{} [{}] ({})", p.coefficient, p.simplex.domain() == Domain::cube ? "cube" : "simplex",
                                 fmt::join(comps, ", ")));
  }
  return fmt::format("{{{}}}", fmt::join(pieces, "; "));
}

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

RationalMatrix matrix_of(int n, int k, int target_degree, const std::function<MultiCovector(const MultiCovector&)>& fn) {
  const auto source = monomial::basis(n, k, Space::horizontal);
  const auto target = monomial::basis(n, target_degree, Space::horizontal);
  RationalMatrix m(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    const MultiCovector image = fn(MultiCovector::monomial(n, source[c]));
    if (image.degree() != target_degree) continue;
    for (const auto& [mask, coef] : image.terms()) {
      const int r = monomial::position(n, mask, Space::horizontal);
      m(static_cast<std::size_t>(r), c) = coef;
    }
  }
  return m;
}

MultiCovector lefschetz_power(const MultiCovector& a, int p) {
  MultiCovector out = a;
  for (int i = 0; i < p; ++i) out = wedge(dtheta(a.rank()), out);
  return out;
}

MultiCovector lower(const MultiCovector& a) {
  if (a.degree() < 2) return MultiCovector(a.rank(), std::max(0, a.degree() - 2));
  return lefschetz(a, Lefschetz::lower);
}

MultiCovector covector_pinv(const RuminOperators& ops, const MultiCovector& a) {
  if (a.degree() == 0) return MultiCovector(a.rank(), 0);
  return ops.apply_d0_pinv(a);
}

std::vector<Chain> standard_chains(int n) {
  std::vector<Chain> out{chains::horizontal_segment(n), chains::vertical_segment(n)};
  if (n == 1) {
    out.push_back(chains::vertical_square());
    out.push_back(chains::graph_square());
  }
  if (n == 2) {
    out.push_back(chains::colegendrian_plane());
    out.push_back(chains::symplectic_plane());
  }
  return out;
}

// Coefficient degrees for the rows that integrate products of forms and bumps.
int pairing_degree(int bound) { return std::min(bound, 2); }

} // namespace

std::vector<ConformanceRow> hodge_rows(int n) {
  std::vector<ConformanceRow> rows;
  const int dim = 2 * n;

  std::vector<std::pair<int, Mask>> monomials;
  for (int k = 0; k <= dim; ++k)
    for (Mask m : monomial::basis(n, k, Space::horizontal)) monomials.emplace_back(k, m);
  rows.push_back(run_row(fmt::format("hodge_star_lambda_n{}", n), "star Lambda = L star on horizontal covectors",
                         static_cast<int>(monomials.size()), [&](int i) {
                           const auto e = MultiCovector::monomial(n, monomials[static_cast<std::size_t>(i)].second);
                           const MultiCovector lhs = hodge_star_h(lower(e));
                           const MultiCovector star = hodge_star_h(e);
                           const MultiCovector rhs =
                               star.degree() + 2 > dim ? MultiCovector(n, lhs.degree()) : lefschetz(star, Lefschetz::raise);
                           return unless(lhs == rhs, [&] { return "e = " + show(e); });
                         }));

  rows.push_back(run_row(fmt::format("hodge_kernels_n{}", n), "ker Lambda = ker L^(n-k+1) in degree k <= n", n + 1,
                         [&](int k) {
                           const RationalMatrix lam = matrix_of(n, k, std::max(k - 2, 0), lower);
                           const int p = n - k + 1;
                           const RationalMatrix lp =
                               matrix_of(n, k, std::min(k + 2 * p, dim + 1),
                                         [&](const MultiCovector& a) { return lefschetz_power(a, p); });
                           const auto cols = monomial::basis(n, k, Space::horizontal).size();
                           const RationalMatrix a = k >= 2 ? lam : RationalMatrix(1, cols);
                           const RationalMatrix b = k + 2 * p <= dim ? lp : RationalMatrix(1, cols);
                           return unless(same_kernel(a, b), [&] { return fmt::format("degree {}", k); });
                         }));

  rows.push_back(run_row(fmt::format("hodge_ranges_n{}", n), "range Lambda = range L^(n-k+1) in degree 2n-k", n + 1,
                         [&](int k) {
                           const int target = dim - k;
                           const int p = n - k + 1;
                           const auto rows_n = monomial::basis(n, target, Space::horizontal).size();
                           const int lam_src = target + 2;
                           const int lp_src = target - 2 * p;
                           const RationalMatrix a = lam_src <= dim ? matrix_of(n, lam_src, target, lower) : RationalMatrix(rows_n, 1);
                           const RationalMatrix b =
                               lp_src >= 0 ? matrix_of(n, lp_src, target, [&](const MultiCovector& x) { return lefschetz_power(x, p); })
                                           : RationalMatrix(rows_n, 1);
                           return unless(same_column_space(a, b), [&] { return fmt::format("degree {}", target); });
                         }));

  const RuminOperators ops = RuminOperators::build(n);
  std::vector<std::pair<Mask, Mask>> pairs;
  for (int h = 1; h <= dim + 1; ++h)
    for (Mask a : monomial::basis(n, h))
      for (Mask b : monomial::basis(n, dim + 2 - h)) pairs.emplace_back(a, b);
  rows.push_back(run_row(fmt::format("hodge_pinv_adjoint_n{}", n), "(d0^-1 a) ^ b = (-1)^h a ^ d0^-1 b, deg a + deg b = 2n+2",
                         static_cast<int>(pairs.size()), [&](int i) {
                           const auto [ma, mb] = pairs[static_cast<std::size_t>(i)];
                           const auto a = MultiCovector::monomial(n, ma);
                           const auto b = MultiCovector::monomial(n, mb);
                           const int h = a.degree();
                           const MultiCovector lhs = wedge(covector_pinv(ops, a), b);
                           MultiCovector rhs = wedge(a, covector_pinv(ops, b));
                           if (h % 2 == 1) rhs = -rhs;
                           return unless(lhs == rhs, [&] { return "a = " + show(a) + ", b = " + show(b); });
                         }));
  return rows;
}

ConformanceReport run_verify(const VerifyOptions& opt) {
  const int n = opt.n;
  if (n < 1 || n > kMaxRank) throw std::invalid_argument(fmt::format("n must be in 1..{}", kMaxRank));
  if (opt.degree_bound < 0) throw std::invalid_argument("degree bound must be non-negative");
  const RuminOperators ops = RuminOperators::build(n, opt.build);
  const int top = 2 * n + 1;
  const int deg = opt.degree_bound;
  const int count = opt.instances;
  ConformanceReport report;
  Battery bat(opt.seed);
  auto add = [&](ConformanceRow row) { report.rows.push_back(std::move(row)); };

  add(run_row("d_squared", "d d a = 0", count, [&](int i) {
    const PolyForm a = bat.form(n, i % top, deg);
    return unless(exterior_d(exterior_d(a)).is_zero(), [&] { return "a = " + show(a); });
  }));

  add(run_row("dc_squared", "d_c d_c g = 0 for sections g of E0", count, [&](int i) {
    const PolyForm g = bat.e0_section(ops, i % (top - 1), deg);
    const PolyForm once = ops.d_c(g);
    const PolyForm twice = ops.d_c(once);
    return unless(twice.is_zero(), [&] { return "g = " + show(g) + ", d_c d_c g = " + show(twice); });
  }));

  add(run_row("pi_E_idempotent", "Pi_E Pi_E a = Pi_E a", count, [&](int i) {
    const PolyForm a = bat.form(n, i % (top + 1), deg);
    const PolyForm p = ops.pi_E(a);
    return unless(ops.pi_E(p) == p, [&] { return "a = " + show(a); });
  }));

  add(run_row("pi_E_chain_map", "d Pi_E a = Pi_E d a", count, [&](int i) {
    const PolyForm a = bat.form(n, i % top, deg);
    return unless(exterior_d(ops.pi_E(a)) == ops.pi_E(exterior_d(a)), [&] { return "a = " + show(a); });
  }));

  add(run_row("pi_E0_pi_E_pi_E0", "Pi_E0 Pi_E Pi_E0 = Pi_E0", count, [&](int i) {
    const PolyForm a = bat.form(n, i % (top + 1), deg);
    const PolyForm p0 = ops.apply_pi_E0(a);
    return unless(ops.apply_pi_E0(ops.pi_E(p0)) == p0, [&] { return "a = " + show(a); });
  }));

  add(run_row("pi_E_pi_E0_pi_E", "Pi_E Pi_E0 Pi_E = Pi_E", count, [&](int i) {
    const PolyForm a = bat.form(n, i % (top + 1), deg);
    const PolyForm p = ops.pi_E(a);
    return unless(ops.pi_E(ops.apply_pi_E0(p)) == p, [&] { return "a = " + show(a); });
  }));

  add(run_row("pi_E_on_E0", "Pi_E g = g - d0^-1 d1 g (h <= n), Pi_E g = g (h > n)", count, [&](int i) {
    const int h = i % (top + 1);
    const PolyForm g = bat.e0_section(ops, h, deg);
    const PolyForm p = ops.pi_E(g);
    if (h > n) return unless(p == g, [&] { return "g = " + show(g); });
    const PolyForm expected = h == 0 ? g : g - ops.apply_d0_pinv(d_weight_part(g, 1));
    return unless(p == expected && (p - g).is_vertical(), [&] { return "g = " + show(g); });
  }));

  add(run_row("pi_E0_orthogonal_projector", "Pi_E0^2 = Pi_E0 = Pi_E0^T", top + 1, [&](int k) {
    const RationalMatrix& p = ops.pi_E0().block(k)->matrix;
    return unless(p * p == p && p.transpose() == p, [&] { return fmt::format("degree {}", k); });
  }));

  add(run_row("d0_pinv_moore_penrose", "A A+ A = A, A+ A A+ = A+, A A+ and A+ A symmetric", top, [&](int k) {
    const RationalMatrix& a = ops.d0().block(k)->matrix;
    const RationalMatrix& p = ops.d0_pinv().block(k + 1)->matrix;
    const bool ok = a * p * a == a && p * a * p == p && (a * p).transpose() == a * p && (p * a).transpose() == p * a;
    return unless(ok, [&] { return fmt::format("degree {}", k); });
  }));

  add(run_row("d0_pinv_vertical_weights", "d0^-1 is vertical-valued and commutes with dilations", count, [&](int i) {
    const MultiCovector a = bat.covector(n, 1 + i % top);
    const Rational lambda = bat.scale();
    const MultiCovector p = ops.apply_d0_pinv(a);
    const bool ok = p.is_vertical() && ops.apply_d0_pinv(dilation_pullback(lambda, a)) == dilation_pullback(lambda, p);
    return unless(ok, [&] { return "a = " + show(a); });
  }));

  add(run_row("pi_E0_weights", "Pi_E0 s_lambda^* = s_lambda^* Pi_E0", count, [&](int i) {
    const PolyForm a = bat.form(n, i % (top + 1), deg);
    const Rational lambda = bat.scale();
    return unless(ops.apply_pi_E0(dilation_pullback(lambda, a)) == dilation_pullback(lambda, ops.apply_pi_E0(a)),
                  [&] { return "a = " + show(a) + ", lambda = " + lambda.get_str(); });
  }));

  add(run_row("e0_dimensions", "rank Pi_E0 = dim of the primitive / theta ^ ker L description", top + 1, [&](int h) {
    const RuminBasis oracle = e0_basis(n, h);
    RationalMatrix span(monomial::basis(n, h).size(), oracle.elements.size());
    bool shape = true;
    for (std::size_t c = 0; c < oracle.elements.size(); ++c) {
      const auto& e = oracle.elements[c];
      shape = shape && (h <= n ? e.is_horizontal() : e.is_vertical());
      const auto v = e.to_vector();
      for (std::size_t r = 0; r < v.size(); ++r) span(r, c) = v[r];
    }
    const RationalMatrix& p = ops.pi_E0().block(h)->matrix;
    const int expected = h <= n ? binomial(2 * n, h) - binomial(2 * n, h - 2)
                                : binomial(2 * n, top - h) - binomial(2 * n, top - h - 2);
    const bool ok = shape && static_cast<int>(p.rank()) == expected && static_cast<int>(span.rank()) == expected &&
                    (oracle.elements.empty() || same_column_space(p, span));
    return unless(ok, [&] { return fmt::format("degree {}: rank {} expected {}", h, p.rank(), expected); });
  }));

  add(run_row("rumin_E_membership", "Pi_E a = a iff the theta ^ dtheta^p conditions hold", count, [&](int i) {
    const int h = (i / 2) % (top + 1);
    PolyForm a = bat.form(n, h, deg);
    if (i % 2 == 0) a = ops.pi_E(a);
    const bool member = ops.pi_E(a) == a;
    bool cond;
    if (h <= n) {
      const PolyForm r1 = PolyForm::from_covector(theta_dtheta_power(n, n - h + 1));
      const PolyForm r2 = PolyForm::from_covector(theta_dtheta_power(n, n - h));
      cond = wedge(r1, a).is_zero() && (h == top || wedge(r2, exterior_d(a)).is_zero());
    } else {
      cond = a.is_vertical() && (h == top || exterior_d(a).is_vertical());
    }
    return unless(member == cond, [&] { return fmt::format("a = {} (member {}, conditions {})", show(a), member, cond); });
  }));

  add(run_row("dc_weight_order", "d_c is homogeneous of order 1 (h != n) or 2 (h = n) in horizontal derivatives", count,
              [&](int i) {
                const int h = i % top;
                const auto basis = monomial::basis(n, h);
                const Mask e = basis[static_cast<std::size_t>(bat.integer(0, static_cast<long>(basis.size()) - 1))];
                const PolyForm shape = ops.apply_pi_E0(PolyForm::from_covector(MultiCovector::monomial(n, e)));
                const int w = monomial::weight(n, e);
                Exponents ex{};
                const int d = static_cast<int>(bat.integer(0, deg + 1));
                for (int j = 0; j < d; ++j) ++ex[static_cast<std::size_t>(bat.integer(0, top - 1))];
                const Polynomial f = Polynomial::monomial(top, ex);
                const int m = f.weighted_degree(coord::weights(n));
                const PolyForm g = f * shape;
                const PolyForm out = ops.d_c(g);
                const int order = h == n ? 2 : 1;
                bool ok = true;
                for (const auto& [mask, coef] : out.terms())
                  ok = ok && monomial::weight(n, mask) == w + order && coef.weighted_degree(coord::weights(n)) == m - order &&
                       coef.min_weighted_degree(coord::weights(n)) == m - order;
                return unless(ok, [&] { return "g = " + show(g) + ", d_c g = " + show(out); });
              }));

  add(run_row("dc_example_second_order", "d_c(x^2 dy) = 2 dx ^ theta in H^1", n == 1 ? 1 : 0, [&](int) {
    const PolyForm g = Polynomial(coord::x_poly(1, 1) * coord::x_poly(1, 1)) * PolyForm::from_covector(dy(1, 1));
    const PolyForm expected = Rational(2) * PolyForm::from_covector(wedge(dx(1, 1), theta(1)));
    return unless(ops.d_c(g) == expected, [&] { return "d_c(x^2 dy) = " + show(ops.d_c(g)); });
  }));

  for (auto& row : hodge_rows(n)) add(std::move(row));

  if (!opt.currents) return report;

  const int pd = pairing_degree(deg);
  const Box box = Box::cube(n, 1);
  auto bump_form = [&](int degree) { return bump_multiply(bat.form(n, degree, std::min(pd, 1)), box); };
  // rows integrating bump forms are the expensive ones
  const int heavy = std::max(std::min(count, 50), count / 4);

  add(run_row("stokes_chains", "<dT, w> = <T, dw> for polynomial chains", count, [&](int i) {
    const int k = 1 + i % std::min(top, 3);
    const Chain T = random_polynomial_chain(bat, n, k, 2, 2);
    const PolyForm w = bat.form(n, k - 1, pd);
    return unless(pair_exact(boundary(T), w) == pair_exact(T, exterior_d(w)), [&] { return "w = " + show(w); });
  }));

  add(run_row("ff_boundary", "d FF(a) = (-1)^k FF(d a)", heavy, [&](int i) {
    const int h = i % (top - 1);
    const SmoothCurrent S = ff_current(bump_form(h), box);
    const PolyForm w = bat.form(n, S.dimension() - 1, pd);
    return unless(ff_pair(boundary(S), w) == ff_pair(S, exterior_d(w)), [&] { return "a = " + show(S.form); });
  }));

  add(run_row("b_operator", "B FF(a) = (-1)^h FF(d0^-1 a)", heavy, [&](int i) {
    const int h = 1 + i % (top - 1);
    const SmoothCurrent S = ff_current(bump_form(h), box);
    const PolyForm w = bat.form(n, S.dimension() + 1, pd);
    return unless(b_operator(Functional::of(S))(w) == ff_pair(b_operator(S), w), [&] { return "a = " + show(S.form); });
  }));

  add(run_row("pi_E_currents", "T - dBT - BdT = FF(Pi_E a) for T = FF(a)", heavy, [&](int i) {
    const int h = 1 + i % (top - 1);
    const SmoothCurrent S = ff_current(bump_form(h), box);
    const Functional T = Functional::of(S);
    const Functional lhs = T - boundary(b_operator(T)) - b_operator(boundary(T));
    const PolyForm w = bat.form(n, S.dimension(), pd);
    return unless(lhs(w) == ff_pair(oblique_correction(S), w), [&] { return "a = " + show(S.form) + ", w = " + show(w); });
  }));

  add(run_row("involution_low_hat_tilde", "hat tilde T = T on E0 test forms (k <= n)", heavy, [&](int i) {
    const int k = i % (n + 1);
    const Functional T = i % 2 == 0 ? Functional::of(random_polynomial_chain(bat, n, k, 2, 2))
                                    : Functional::of(ru_current(bump_form(top - k), box));
    const PolyForm g = bat.e0_section(ops, k, pd);
    return unless(hat(tilde(T))(g) == T(g), [&] { return T.description() + " at g = " + show(g); });
  }));

  add(run_row("involution_low_tilde_hat", "tilde hat T = T for horizontal T (k <= n)", count, [&](int i) {
    const int k = n == 1 ? i % 2 : i % 3;
    const Chain T = k == 0 ? random_polynomial_chain(bat, n, 0, 2) : k == 1 ? legendrian_curve(bat, n) : legendrian_surface(bat, n);
    const PolyForm w = bat.form(n, k, pd);
    const Functional F = Functional::of(T);
    return unless(tilde(hat(F))(w) == F(w), [&] { return "w = " + show(w); });
  }));

  add(run_row("involution_high", "hat tilde Ru(b) = Ru(b), tilde hat FF(a) = FF(a) for a in E (k > n)", heavy, [&](int i) {
    const int h = i % (n + 1);
    if (i % 2 == 0) {
      const PolyForm b = ops.apply_pi_E0(bump_form(h));
      return unless(hat(tilde(ru_current(b, box))).form == b, [&] { return "b = " + show(b); });
    }
    const PolyForm a = ops.pi_E(bump_form(h));
    return unless(tilde(hat(ff_current(a, box))).form == a, [&] { return "a = " + show(a); });
  }));

  add(run_row("boundary_equivariance_low", "d tilde T = tilde d_H T as pairings (1 <= k <= n)", count, [&](int i) {
    const int k = 1 + i % n;
    const Functional T = Functional::of(random_polynomial_chain(bat, n, k, 2, 2));
    const PolyForm w = bat.form(n, k - 1, pd);
    return unless(boundary(tilde(T))(w) == tilde(rumin_boundary(T))(w), [&] { return "w = " + show(w); });
  }));

  add(run_row("boundary_equivariance_high", "d tilde Ru(b) = tilde d_H Ru(b) (k - 1 > n)", heavy, [&](int i) {
    const int h = i % n;
    const SmoothCurrent R = ru_current(ops.apply_pi_E0(bump_form(h)), box);
    return unless(boundary(tilde(R)).form == tilde(boundary(R)).form, [&] { return "b = " + show(R.form); });
  }));

  add(run_row("rumin_boundary_by_parts", "<d_H Ru(b), g> = <Ru(b), d_c g> for g in E0", heavy, [&](int i) {
    const int h = i % (top - 1);
    const SmoothCurrent R = ru_current(ops.apply_pi_E0(bump_form(h)), box);
    const PolyForm g = bat.e0_section(ops, R.dimension() - 1, pd);
    return unless(Functional::of(boundary(R))(g) == rumin_boundary(Functional::of(R))(g),
                  [&] { return "b = " + show(R.form) + ", g = " + show(g); });
  }));

  std::vector<Chain> battery = standard_chains(n);
  for (int i = 0; i < 4; ++i) battery.push_back(legendrian_curve(bat, n));
  for (int i = 0; i < 6; ++i) battery.push_back(random_polynomial_chain(bat, n, 1 + i % std::min(top, 3), 1, 2));
  const int nb = static_cast<int>(battery.size());

  add(run_row("mass_comparisons", "rumin mass <= mass, oblique mass <= mass", nb, [&](int i) {
    const MassReport m = mass_report(battery[static_cast<std::size_t>(i)]);
    const double tol = 1e-9 * std::max(1.0, m.riemannian_mass) + 10 * m.quadrature_error_estimate;
    return unless(m.rumin_mass <= m.riemannian_mass + tol && m.oblique_mass <= m.riemannian_mass + tol, [&] {
      return fmt::format("chain {}: mass {:.17g}, oblique {:.17g}, rumin {:.17g}", i, m.riemannian_mass, m.oblique_mass,
                         m.rumin_mass);
    });
  }));

  add(run_row("rescale_inequality", "M(s_l# T) <= l^(k+1) M(T|theta) + l^k M(T)", nb * 4, [&](int i) {
    const Chain& T = battery[static_cast<std::size_t>(i / 4)];
    const long lambda = 1L << (i % 4);
    const MassReport m = mass_report(T);
    const MassReport ml = mass_report(pushforward_dilation(Rational(lambda), T));
    const int k = T.dim();
    const double l = static_cast<double>(lambda);
    const double bound = std::pow(l, k + 1) * m.oblique_mass + std::pow(l, k) * m.riemannian_mass;
    const double tol = 1e-6 * std::max(1.0, bound);
    return unless(ml.riemannian_mass <= bound + tol, [&] {
      return fmt::format("chain {} {}, lambda {}: {:.17g} > {:.17g}", i / 4, show(T), lambda, ml.riemannian_mass, bound);
    });
  }));

  add(run_row("oblique_mass_two_routes", "sup of <T, theta ^ phi> = integral of the theta-density", nb, [&](int i) {
    const Chain& T = battery[static_cast<std::size_t>(i)];
    const MassReport m = mass_report(T);
    const ObliquePairingEstimate p = oblique_mass_by_pairing(T, 50, opt.seed);
    const double tol = 1e-9 * std::max(1.0, m.oblique_mass) + 10 * m.quadrature_error_estimate;
    return unless(p.best_random <= m.oblique_mass + tol && std::fabs(p.aligned - m.oblique_mass) <= tol, [&] {
      return fmt::format("chain {}: density {:.17g}, aligned {:.17g}, random {:.17g}", i, m.oblique_mass, p.aligned,
                         p.best_random);
    });
  }));

  return report;
}

} // namespace heis
