#include "heisenberg/currents.hpp"
#include "heisenberg/expression.hpp"
#include "heisenberg/random.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace heis;

namespace {

Rational q(long p, long d = 1) { return ratio(p, d); }
PolyForm form(int n, const char* text) { return parse_form(n, text); }

bool holds_or_vacuous(Status s) { return s == Status::holds || s == Status::vacuous; }

// Midpoint rule on a fine grid of the unit square.
double grid_integral(const std::function<double(double, double)>& f, int steps = 800) {
  double s = 0;
  const double h = 1.0 / steps;
  for (int i = 0; i < steps; ++i)
    for (int j = 0; j < steps; ++j) s += f((i + 0.5) * h, (j + 0.5) * h);
  return s * h * h;
}

} // namespace

TEST(Pairing, Examples) {
  const Chain sq = chains::vertical_square();
  EXPECT_EQ(pair_exact(sq, form(1, "theta^dx")), -1);
  EXPECT_NEAR(pair(sq, form(1, "theta^dx"), {.prefer_exact = false}).value, -1.0, 1e-14);
  EXPECT_EQ(pair_exact(chains::horizontal_segment(), form(1, "theta")), 0);
  EXPECT_EQ(pair_exact(sq, PolyForm(1, 2)), 0);
  const PairingResult r = pair(sq, form(1, "x*dx^dy + t*theta^dy"));
  ASSERT_TRUE(r.exact.has_value());
  EXPECT_EQ(*r.exact, 0);
  EXPECT_THROW(pair(sq, form(1, "dx")), std::invalid_argument);
}

TEST(Pairing, StokesOnPolynomialChains) {
  Battery b(101);
  for (int i = 0; i < 40; ++i) {
    const int n = 1 + i % 2;
    const int k = 1 + i % 3;
    const Chain T = random_polynomial_chain(b, n, k, 2, 2);
    const PolyForm w = b.form(n, k - 1, 2);
    EXPECT_EQ(pair_exact(boundary(T), w), pair_exact(T, exterior_d(w)));
  }
}

TEST(Pairing, StokesOnSmoothChainWithinQuadratureError) {
  Chain T(1, 2);
  T.add(1, ParamSimplex::parse(2, Domain::cube, {"u1", "sin(u2)", "exp(u1*u2)/3"}, 1, 10));
  const PolyForm w = form(1, "x*y*dx + t**2*theta + y*dy");
  const PairingResult lhs = pair(boundary(T), w);
  const PairingResult rhs = pair(T, exterior_d(w));
  EXPECT_LE(std::fabs(lhs.value - rhs.value), 10 * (lhs.error_estimate + rhs.error_estimate) + 1e-12);
}

TEST(Pairing, BoundaryOfBoundaryPairsToZero) {
  Battery b(103);
  for (int i = 0; i < 20; ++i) {
    const Chain T = random_polynomial_chain(b, 1, 2 + i % 2, 2, 2);
    const PolyForm w = b.form(1, T.dim() - 2, 3);
    EXPECT_EQ(pair_exact(boundary(boundary(T)), w), 0);
  }
}

TEST(Pairing, DilationActsByPullback) {
  Battery b(107);
  for (int i = 0; i < 20; ++i) {
    const Chain T = random_polynomial_chain(b, 1, 1 + i % 3, 2, 2);
    const PolyForm w = b.form(1, T.dim(), 2);
    const Rational l = b.scale();
    EXPECT_EQ(pair_exact(pushforward_dilation(l, T), w), pair_exact(T, dilation_pullback(l, w)));
  }
}

TEST(Mass, Examples) {
  const MassReport sq = mass_report(chains::vertical_square());
  EXPECT_NEAR(sq.riemannian_mass, 1.0, 1e-12);
  EXPECT_NEAR(sq.oblique_mass, 1.0, 1e-12);
  EXPECT_NEAR(sq.rumin_mass, 1.0, 1e-12);
  EXPECT_FALSE(sq.upper_bound_only);

  const MassReport seg = mass_report(chains::horizontal_segment());
  EXPECT_NEAR(seg.riemannian_mass, 1.0, 1e-12);
  EXPECT_NEAR(seg.oblique_mass, 0.0, 1e-15);
  EXPECT_NEAR(seg.rumin_mass, 1.0, 1e-12);

  EXPECT_NEAR(rumin_mass(chains::vertical_segment()), 0.0, 1e-15);
  EXPECT_NEAR(mass(chains::vertical_segment()), 1.0, 1e-12);

  const Chain big = pushforward_dilation(q(2), chains::vertical_square());
  EXPECT_NEAR(mass(big), 8.0, 1e-12);
  EXPECT_NEAR(oblique_mass(big), 8.0, 1e-12);
  const Chain seg2 = pushforward_dilation(q(2), chains::horizontal_segment());
  EXPECT_NEAR(mass(seg2), 2.0, 1e-12);
  EXPECT_NEAR(oblique_mass(seg2), 0.0, 1e-15);

  EXPECT_EQ(mass(Chain(1, 1)), 0.0);
}

TEST(Mass, GraphSquareAgainstClosedFormDensities) {
  const Chain g = chains::graph_square();
  // tangent frame X + (v/2) Z, Y - (u/2) Z: area density sqrt(1 + (u^2+v^2)/4),
  // theta-density sqrt(u^2+v^2)/2
  const double area = grid_integral([](double u, double v) { return std::sqrt(1 + (u * u + v * v) / 4); });
  const double ob = (std::sqrt(2.0) + std::asinh(1.0)) / 6;
  const MassReport m = mass_report(g);
  EXPECT_NEAR(m.riemannian_mass, area, 1e-6);
  EXPECT_NEAR(m.oblique_mass, ob, 1e-4);
  EXPECT_NEAR(grid_integral([](double u, double v) { return std::sqrt(u * u + v * v) / 2; }), ob, 1e-6);
}

TEST(Mass, OverlappingChainsAreUpperBounds) {
  Chain T = chains::horizontal_segment();
  T.add(-1, ParamSimplex::parse(1, Domain::cube, {"u1", "0", "0"}));
  T.embedded_disjoint = false;
  const MassReport m = mass_report(T);
  EXPECT_TRUE(m.upper_bound_only);
  EXPECT_NEAR(m.riemannian_mass, 2.0, 1e-12);
}

TEST(Mass, ComparisonsAndRescaleOnRandomChains) {
  Battery b(109);
  for (int i = 0; i < 12; ++i) {
    const int n = 1 + i % 2;
    const Chain T = random_polynomial_chain(b, n, 1 + i % 3, 1, 2);
    const MassReport m = mass_report(T);
    const double tol = 1e-9 + 10 * m.quadrature_error_estimate;
    EXPECT_LE(m.rumin_mass, m.riemannian_mass + tol);
    EXPECT_LE(m.oblique_mass, m.riemannian_mass + tol);
    const int k = T.dim();
    for (long l : {2L, 4L}) {
      const double ml = mass(pushforward_dilation(Rational(l), T));
      const double bound = std::pow(l, k + 1) * m.oblique_mass + std::pow(l, k) * m.riemannian_mass;
      EXPECT_LE(ml, bound * (1 + 1e-6));
      EXPECT_NEAR(oblique_mass(pushforward_dilation(Rational(l), T)), std::pow(l, k + 1) * m.oblique_mass,
                  1e-6 * std::pow(l, k + 1) * std::max(1.0, m.oblique_mass));
    }
  }
}

TEST(Mass, ObliquePairingRouteNeverExceedsDensityRoute) {
  Battery b(113);
  std::vector<Chain> chains{chains::vertical_square(), chains::graph_square(), chains::colegendrian_plane()};
  for (int i = 0; i < 4; ++i) chains.push_back(random_polynomial_chain(b, 1, 2, 1, 2));
  for (const Chain& T : chains) {
    const MassReport m = mass_report(T);
    const ObliquePairingEstimate p = oblique_mass_by_pairing(T, 50, 3);
    const double tol = 1e-9 + 10 * m.quadrature_error_estimate;
    EXPECT_LE(p.best_random, m.oblique_mass + tol);
    EXPECT_NEAR(p.aligned, m.oblique_mass, tol);
    EXPECT_GE(p.best, p.best_random);
  }
}

TEST(Classify, ChainExamples) {
  const Classification seg = classify(chains::horizontal_segment());
  EXPECT_EQ(seg.horizontal.status, Status::holds);
  EXPECT_TRUE(seg.horizontal.exact);
  EXPECT_EQ(seg.co_legendrian.status, Status::not_applicable);

  const Classification sq = classify(chains::vertical_square());
  EXPECT_EQ(sq.horizontal.status, Status::fails);
  EXPECT_EQ(sq.co_legendrian.status, Status::vacuous);
  EXPECT_EQ(to_string(sq.co_legendrian.status), "vacuously true");

  EXPECT_EQ(classify(chains::colegendrian_plane()).co_legendrian.status, Status::holds);
  EXPECT_EQ(classify(chains::symplectic_plane()).co_legendrian.status, Status::fails);
}

TEST(Classify, LegendrianBatteryIsHorizontal) {
  Battery b(127);
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(classify(legendrian_curve(b, 1 + i % 3)).horizontal.status, Status::holds);
    EXPECT_EQ(classify(legendrian_surface(b, 2)).horizontal.status, Status::holds);
  }
}

TEST(Classify, SmoothMapsUseTolerance) {
  Chain T(1, 1);
  // horizontal lift of a circle arc
  T.add(1, ParamSimplex::parse(1, Domain::cube, {"sin(u1)", "1 - cos(u1)", "(u1 - sin(u1))/2"}));
  const Classification c = classify(T);
  EXPECT_FALSE(c.horizontal.exact);
  EXPECT_GT(c.tolerance, 0.0);
  EXPECT_EQ(c.horizontal.status, Status::holds);
  Chain V(1, 1);
  V.add(1, ParamSimplex::parse(1, Domain::cube, {"sin(u1)", "0", "u1"}));
  EXPECT_EQ(classify(V).horizontal.status, Status::fails);
}

TEST(Classify, LevelSetCurrentsMatchCoIsotropyOracle) {
  // FF(psi(f) df1 ^ df2) averages the level sets of a linear f: H^2 -> R^2.
  // The levels are co-Legendrian iff the horizontal parts of df1, df2
  // Poisson-commute: sum_j (a_xj b_yj - a_yj b_xj) = 0.
  Battery b(131);
  const int n = 2;
  const Box box = Box::cube(n, 1);
  auto omega = [](const std::vector<Rational>& a, const std::vector<Rational>& c) -> Rational {
    return a[0] * c[2] - a[2] * c[0] + a[1] * c[3] - a[3] * c[1];
  };
  auto covector = [&](const std::vector<Rational>& a) {
    MultiCovector v(n, 1);
    for (int j = 0; j < 4; ++j) v.add(static_cast<Mask>(1u << j), a[static_cast<std::size_t>(j)]);
    return v;
  };
  auto linear = [&](const std::vector<Rational>& a) {
    Polynomial p(2 * n + 1);
    for (int j = 0; j < 4; ++j) p += a[static_cast<std::size_t>(j)] * Polynomial::variable(2 * n + 1, j);
    return p;
  };
  int commuting = 0, total = 0;
  for (int i = 0; i < 24; ++i) {
    std::vector<Rational> a(4), c(4);
    for (auto& v : a) v = b.integer(-2, 2);
    for (auto& v : c) v = b.integer(-2, 2);
    if (i % 2 == 0) {
      // project c onto the omega-orthogonal of a along J a
      const std::vector<Rational> ja{-a[2], -a[3], a[0], a[1]};
      const Rational s = omega(a, ja);
      if (s != 0) {
        const Rational f = omega(a, c) / s;
        for (int j = 0; j < 4; ++j) c[static_cast<std::size_t>(j)] -= f * ja[static_cast<std::size_t>(j)];
      }
    }
    const MultiCovector df = wedge(covector(a), covector(c));
    if (df.is_zero()) continue;
    const Polynomial f1 = linear(a);
    const Polynomial psi = Polynomial::constant(2 * n + 1, 1) + f1 * f1;
    const SmoothCurrent S = ff_current(psi * PolyForm::from_covector(df), box);
    ASSERT_EQ(S.dimension(), 3);
    const bool coisotropic = omega(a, c) == 0;
    const Classification cl = classify(S);
    EXPECT_EQ(cl.oblique.status == Status::holds, coisotropic) << "instance " << i;
    EXPECT_EQ(cl.co_legendrian.status == Status::holds, coisotropic);
    commuting += coisotropic;
    ++total;
  }
  EXPECT_GT(commuting, 0);
  EXPECT_LT(commuting, total);

  const Polynomial psi = Polynomial::constant(5, 1) + pow(coord::y_poly(n, 1), 2);
  EXPECT_EQ(classify(ff_current(psi * form(n, "dy1^dy2"), box)).oblique.status, Status::holds);
  EXPECT_EQ(classify(ff_current(psi * form(n, "dy1^dx1"), box)).oblique.status, Status::fails);
}

TEST(SmoothCurrent, PairingExampleAndBoundarySign) {
  const Box box = Box::cube(1, 1);
  const SmoothCurrent S = ff_current(form(1, "theta^dx"), box);
  // theta ^ dx ^ dy = dx ^ dy ^ theta
  EXPECT_EQ(ff_pair(S, form(1, "dy")), 8);
  EXPECT_EQ(ff_pair(ff_current(PolyForm(1, 2), box), form(1, "dy")), 0);
  Battery b(137);
  for (int i = 0; i < 10; ++i) {
    const SmoothCurrent T = ff_current(bump_multiply(b.form(1, 1 + i % 2, 1), box), box);
    const PolyForm w = b.form(1, T.dimension() - 1, 2);
    EXPECT_EQ(ff_pair(boundary(T), w), ff_pair(T, exterior_d(w)));
  }
  EXPECT_THROW(ff_current(form(1, "dx"), Box::cube(2, 1)), std::invalid_argument);
}

TEST(SmoothCurrent, ObliqueExampleInH1) {
  const Box box = Box::cube(1, 1);
  const Polynomial y = coord::y_poly(1, 1);
  const PolyForm alpha = (Polynomial::constant(3, 2) + y * y * y) * form(1, "dy");
  const SmoothCurrent S = ff_current(alpha, box);
  EXPECT_EQ(S.dimension(), 2);
  const Classification c = classify(S);
  EXPECT_TRUE(holds_or_vacuous(c.oblique.status));
  EXPECT_TRUE(holds_or_vacuous(c.co_legendrian.status));
  EXPECT_TRUE(exterior_d(alpha).is_zero());
  EXPECT_EQ(oblique_correction(S).form, alpha);
  EXPECT_EQ(tilde(hat(S)).form, alpha);
}

TEST(SmoothCurrent, ObliqueCorrectionExamples) {
  const Box box = Box::cube(1, 1);
  EXPECT_TRUE(oblique_correction(ff_current(form(1, "theta"), box)).form.is_zero());
  EXPECT_EQ(oblique_correction(ff_current(form(1, "y*dx"), box)).form, form(1, "y*dx - theta"));
}

TEST(SmoothCurrent, ObliqueCorrectionIsTMinusBoundaryTerms) {
  Battery b(139);
  for (int n = 1; n <= 2; ++n) {
    const Box box = Box::cube(n, 1);
    for (int i = 0; i < 6; ++i) {
      const int h = 1 + i % (2 * n);
      const SmoothCurrent S = ff_current(bump_multiply(b.form(n, h, 1), box), box);
      const Functional T = Functional::of(S);
      const Functional rhs = T - boundary(b_operator(T)) - b_operator(boundary(T));
      const PolyForm w = b.form(n, S.dimension(), 2);
      EXPECT_EQ(ff_pair(oblique_correction(S), w), rhs(w));
      const PolyForm v = b.form(n, S.dimension() + 1, 1);
      EXPECT_EQ(b_operator(T)(v), ff_pair(b_operator(S), v));
    }
  }
}

TEST(Functional, BOperatorExamples) {
  const Functional v = Functional::of(chains::vertical_segment());
  EXPECT_EQ(b_operator(v)(form(1, "-dx^dy")), 1);
  EXPECT_EQ(b_operator(v)(form(1, "dx^dy")), -1);
  EXPECT_EQ(b_operator(Functional::of(chains::horizontal_segment()))(form(1, "-dx^dy")), 0);
}

TEST(Functional, LowCorrespondencesAreInvolutions) {
  Battery b(149);
  const int n = 1;
  const RuminOperators& ops = RuminOperators::cached(n);
  const Box box = Box::cube(n, 1);
  const Functional seg = Functional::of(chains::horizontal_segment());
  for (int i = 0; i < 5; ++i) {
    const PolyForm w = bump_multiply(b.form(n, 1, 2), box);
    EXPECT_EQ(tilde(hat(seg))(w), seg(w));
    EXPECT_EQ(tilde(hat(chains::horizontal_segment()))(w), seg(w));
  }
  for (int i = 0; i < 10; ++i) {
    const Functional T = Functional::of(random_polynomial_chain(b, n, i % 2, 2, 2));
    const PolyForm g = b.e0_section(ops, T.dim(), 2);
    EXPECT_EQ(hat(tilde(T))(g), T(g));
    const Chain L = legendrian_curve(b, n);
    const PolyForm w = b.form(n, 1, 2);
    EXPECT_EQ(tilde(hat(L))(w), Functional::of(L)(w));
  }
  const Functional zero = Rational(0) * seg;
  EXPECT_EQ(tilde(zero)(form(1, "x*dy")), 0);
  EXPECT_THROW(tilde(chains::vertical_square()), UnsupportedCorrespondence);
  EXPECT_THROW(hat(Functional::of(chains::vertical_square())), UnsupportedCorrespondence);
}

TEST(Functional, LowBoundaryEquivariance) {
  Battery b(151);
  for (int n = 1; n <= 2; ++n)
    for (int i = 0; i < 10; ++i) {
      const Functional T = Functional::of(random_polynomial_chain(b, n, 1 + i % n, 2, 2));
      const PolyForm w = b.form(n, T.dim() - 1, 2);
      EXPECT_EQ(boundary(tilde(T))(w), tilde(rumin_boundary(T))(w));
    }
}

TEST(SmoothCurrent, HighCorrespondencesAreInvolutions) {
  Battery b(157);
  for (int n = 1; n <= 2; ++n) {
    const RuminOperators& ops = RuminOperators::cached(n);
    const Box box = Box::cube(n, 1);
    for (int i = 0; i < 6; ++i) {
      const int h = i % (n + 1);
      const PolyForm beta = ops.apply_pi_E0(bump_multiply(b.form(n, h, 1), box));
      EXPECT_EQ(hat(tilde(ru_current(beta, box))).form, beta);
      const PolyForm alpha = ops.pi_E(bump_multiply(b.form(n, h, 1), box));
      EXPECT_EQ(tilde(hat(ff_current(alpha, box))).form, alpha);
      if (h < n) {
        const SmoothCurrent R = ru_current(beta, box);
        EXPECT_EQ(boundary(tilde(R)).form, tilde(boundary(R)).form);
      }
    }
    const PolyForm top = PolyForm::from_covector(MultiCovector::monomial(n, full_volume(n)));
    EXPECT_THROW(tilde(ru_current(top, box)), UnsupportedCorrespondence);
    EXPECT_TRUE(tilde(ru_current(PolyForm(n, 0), box)).form.is_zero());
  }
}

TEST(Functional, RuminBoundaryIntegrationByParts) {
  Battery b(163);
  const int n = 1;
  const RuminOperators& ops = RuminOperators::cached(n);
  const Box box = Box::cube(n, 1);
  for (int i = 0; i < 8; ++i) {
    const int h = i % 2;
    const SmoothCurrent R = ru_current(ops.apply_pi_E0(bump_multiply(b.form(n, h, 1), box)), box);
    const PolyForm g = b.e0_section(ops, R.dimension() - 1, 2);
    EXPECT_EQ(Functional::of(boundary(R))(g), rumin_boundary(Functional::of(R))(g));
  }
}

TEST(Functional, RequiresPolynomialChains) {
  Chain T(1, 1);
  T.add(1, ParamSimplex::parse(1, Domain::cube, {"sin(u1)", "0", "0"}));
  EXPECT_THROW(Functional::of(T)(form(1, "dx")), std::invalid_argument);
}
