#include "heisenberg/expression.hpp"
#include "heisenberg/poly_form.hpp"
#include "heisenberg/random.hpp"
#include "heisenberg/rumin.hpp"

#include <gtest/gtest.h>

using namespace heis;

namespace {

Rational q(long p, long d = 1) { return ratio(p, d); }

PolyForm cov(const MultiCovector& a) { return PolyForm::from_covector(a); }

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

} // namespace

TEST(Polynomial, ArithmeticAndDerivatives) {
  const Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  const Polynomial p = x * x * y + q(3) * y;
  EXPECT_EQ(p.derivative(0), q(2) * x * y);
  EXPECT_EQ(p.derivative(1), x * x + Polynomial::constant(2, 3));
  EXPECT_EQ(p.total_degree(), 3);
  EXPECT_EQ(p.weighted_degree({1, 2}), 4);
  EXPECT_EQ(p.evaluate(std::vector<Rational>{2, q(1, 2)}), q(7, 2));
  EXPECT_EQ(pow(x + y, 2), x * x + q(2) * x * y + y * y);
  EXPECT_EQ(p.compose({y, x}), y * y * x + q(3) * x);
}

TEST(Polynomial, ExactIntegration) {
  const Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  EXPECT_EQ((x * y).integrate_cube(), q(1, 4));
  // int over the triangle of x y = 1/24
  EXPECT_EQ((x * y).integrate_simplex(), q(1, 24));
  EXPECT_EQ(Polynomial::constant(2, 1).integrate_simplex(), q(1, 2));
  EXPECT_EQ((x * x).integrate_box({-1, 0}, {1, 3}), q(2));
}

TEST(Frame, DerivativeExamples) {
  const int n = 1;
  const Polynomial t = coord::t_poly(n), x = coord::x_poly(n, 1), y = coord::y_poly(n, 1);
  EXPECT_EQ(horiz_derive(n, t, {FrameField::X, 1}), q(-1, 2) * y);
  EXPECT_EQ(horiz_derive(n, t, {FrameField::Y, 1}), q(1, 2) * x);
  EXPECT_TRUE(horiz_derive(n, x * x * y, {FrameField::Z, 0}).is_zero());
}

TEST(PolyForm, ExteriorDerivativeExamples) {
  const int n = 1;
  const Polynomial x = coord::x_poly(n, 1), y = coord::y_poly(n, 1);
  const PolyForm dt = exterior_d(PolyForm::scalar(n, coord::t_poly(n)));
  EXPECT_EQ(dt, cov(theta(n)) + q(1, 2) * (x * cov(dy(n, 1))) - q(1, 2) * (y * cov(dx(n, 1))));
  EXPECT_EQ(exterior_d(cov(theta(n))), cov(dtheta(n)));
  EXPECT_EQ(exterior_d(y * cov(dx(n, 1))), -cov(wedge(dx(n, 1), dy(n, 1))));
}

TEST(PolyForm, WeightParts) {
  const int n = 1;
  const Polynomial x = coord::x_poly(n, 1), y = coord::y_poly(n, 1), t = coord::t_poly(n);
  const PolyForm th = cov(theta(n));
  EXPECT_EQ(d_weight_part(th, 0), cov(dtheta(n)));
  EXPECT_TRUE(d_weight_part(th, 1).is_zero());
  EXPECT_TRUE(d_weight_part(th, 2).is_zero());

  const PolyForm ydx = y * cov(dx(n, 1));
  EXPECT_EQ(d_weight_part(ydx, 1), -cov(wedge(dx(n, 1), dy(n, 1))));
  EXPECT_TRUE(d_weight_part(ydx, 0).is_zero());
  EXPECT_TRUE(d_weight_part(ydx, 2).is_zero());

  const PolyForm tdx = t * cov(dx(n, 1));
  EXPECT_EQ(d_weight_part(tdx, 2), cov(wedge(theta(n), dx(n, 1))));
  EXPECT_EQ(d_weight_part(tdx, 1), q(-1, 2) * (x * cov(wedge(dx(n, 1), dy(n, 1)))));
  EXPECT_TRUE(d_weight_part(tdx, 0).is_zero());
}

TEST(PolyForm, WeightPartsSumToExteriorDerivative) {
  Battery b(31);
  for (int i = 0; i < 40; ++i) {
    const int n = 1 + i % 2;
    const PolyForm a = b.form(n, static_cast<int>(b.integer(0, 2 * n)), 3);
    EXPECT_EQ(d_weight_part(a, 0) + d_weight_part(a, 1) + d_weight_part(a, 2), exterior_d(a));
  }
}

TEST(PolyForm, EvaluateAt) {
  const int n = 1;
  const Polynomial y = coord::y_poly(n, 1);
  EXPECT_EQ(evaluate_at(y * cov(dx(n, 1)), make_point({0, 3, 0})), q(3) * dx(n, 1));
  const MultiCovector c = q(2) * wedge(dx(n, 1), dy(n, 1)) - wedge(theta(n), dy(n, 1));
  EXPECT_EQ(evaluate_at(cov(c), GroupPoint::identity(n)), c);
  EXPECT_EQ(evaluate_at(exterior_d(PolyForm::scalar(n, coord::t_poly(n))), GroupPoint::identity(n)), theta(n));
}

TEST(PolyForm, DSquaredVanishes) {
  Battery b(41);
  for (int i = 0; i < 60; ++i) {
    const int n = 1 + i % 3;
    const PolyForm a = b.form(n, static_cast<int>(b.integer(0, 2 * n - 1)), 3);
    EXPECT_TRUE(exterior_d(exterior_d(a)).is_zero());
  }
}

TEST(PolyForm, LeibnizRule) {
  Battery b(43);
  for (int i = 0; i < 30; ++i) {
    const int n = 1 + i % 2;
    const int ka = static_cast<int>(b.integer(0, 2)), kb = static_cast<int>(b.integer(0, 2));
    const PolyForm a = b.form(n, ka, 2), c = b.form(n, kb, 2);
    const Rational sign = ka % 2 == 0 ? 1 : -1;
    EXPECT_EQ(exterior_d(wedge(a, c)), wedge(exterior_d(a), c) + sign * wedge(a, exterior_d(c)));
  }
}

TEST(PolyForm, DCommutesWithDilation) {
  Battery b(47);
  for (int i = 0; i < 30; ++i) {
    const int n = 1 + i % 2;
    const PolyForm a = b.form(n, static_cast<int>(b.integer(0, 2 * n)), 3);
    const Rational l = b.scale();
    EXPECT_EQ(exterior_d(dilation_pullback(l, a)), dilation_pullback(l, exterior_d(a)));
  }
}

TEST(PolyForm, BumpMultiply) {
  const Box box = Box::cube(1, 1);
  const Polynomial bump = bump_polynomial(1, box);
  EXPECT_EQ(bump.evaluate(std::vector<Rational>{q(1, 2), 0, 0}), q(9, 16));
  EXPECT_EQ(bump.evaluate(std::vector<Rational>{1, q(1, 3), 0}), 0);
  EXPECT_TRUE(bump_multiply(PolyForm(1, 1), box).is_zero());
  EXPECT_EQ(bump_multiply(PolyForm::scalar(1, Polynomial::constant(3, 1)), box), PolyForm::scalar(1, bump));
}

TEST(PolyForm, ExactDifferentialsOfBumpFormsIntegrateToZero) {
  Battery b(53);
  for (int i = 0; i < 20; ++i) {
    const int n = 1 + i % 2;
    const Box box = Box::cube(n, b.scale());
    const PolyForm a = bump_multiply(b.form(n, 2 * n, 2), box);
    EXPECT_EQ(integrate_top(exterior_d(a), box), 0);
  }
}

TEST(PolyForm, IntegrateTopOfVolume) {
  const PolyForm vol = cov(MultiCovector::monomial(1, full_volume(1)));
  EXPECT_EQ(integrate_top(vol, Box::cube(1, 1)), 8);
}

TEST(Rumin, AlgebraicOperatorExamples) {
  const RuminOperators& ops = RuminOperators::cached(1);
  const int n = 1;
  EXPECT_EQ(ops.apply_d0(theta(n)), dtheta(n));
  EXPECT_TRUE(ops.apply_d0(dx(n, 1)).is_zero());
  EXPECT_TRUE(ops.apply_d0(wedge(dx(n, 1), dy(n, 1))).is_zero());
  EXPECT_TRUE(ops.apply_d0(wedge(theta(n), dx(n, 1))).is_zero());

  EXPECT_EQ(ops.apply_d0_pinv(dtheta(n)), theta(n));
  EXPECT_TRUE(ops.apply_d0_pinv(dx(n, 1)).is_zero());
  EXPECT_EQ(ops.apply_d0_pinv(wedge(dx(n, 1), dy(n, 1))), -theta(n));

  EXPECT_TRUE(ops.apply_pi_E0(theta(n)).is_zero());
  EXPECT_EQ(ops.apply_pi_E0(dx(n, 1)), dx(n, 1));

  const RuminOperators& ops2 = RuminOperators::cached(2);
  const MultiCovector a = wedge(dx(2, 1), dy(2, 1)), c = wedge(dx(2, 2), dy(2, 2));
  EXPECT_EQ(ops2.apply_pi_E0(a), q(1, 2) * (a - c));
}

TEST(Rumin, D0IsWedgeWithDthetaOnTheThetaFactor) {
  // d0(theta ^ b) = dtheta ^ b for horizontal b; d0 of horizontal covectors is zero.
  Battery b(59);
  for (int n = 1; n <= 3; ++n) {
    const RuminOperators& ops = RuminOperators::cached(n);
    for (int i = 0; i < 20; ++i) {
      const int k = static_cast<int>(b.integer(0, 2 * n));
      const MultiCovector h = weight_split(b.covector(n, k)).first;
      EXPECT_TRUE(ops.apply_d0(h).is_zero());
      EXPECT_EQ(ops.apply_d0(wedge(theta(n), h)), wedge(dtheta(n), h));
    }
  }
}

TEST(Rumin, E0DimensionsMatchBinomialFormula) {
  for (int n = 1; n <= 3; ++n) {
    const RuminOperators& ops = RuminOperators::cached(n);
    for (int h = 0; h <= 2 * n + 1; ++h) {
      const long expected = h <= n ? binomial(2 * n, h) - binomial(2 * n, h - 2)
                                   : binomial(2 * n, h - 1) - binomial(2 * n, h + 1);
      const RuminBasis basis = e0_basis(n, h);
      EXPECT_EQ(static_cast<long>(basis.projector.rank()), expected) << "n=" << n << " h=" << h;
      EXPECT_EQ(static_cast<long>(ops.pi_E0().block(h)->matrix.rank()), expected);
      EXPECT_EQ(basis.projector, ops.pi_E0().block(h)->matrix);
    }
  }
  EXPECT_EQ(e0_basis(1, 0).projector.rank(), 1u);
}

TEST(Rumin, PiEExamples) {
  const int n = 1;
  const Polynomial y = coord::y_poly(n, 1);
  EXPECT_TRUE(pi_E(cov(theta(n))).is_zero());
  EXPECT_EQ(pi_E(cov(dx(n, 1))), cov(dx(n, 1)));
  EXPECT_EQ(pi_E(y * cov(dx(n, 1))), y * cov(dx(n, 1)) - cov(theta(n)));
}

TEST(Rumin, DcExamples) {
  const int n = 1;
  const Polynomial x = coord::x_poly(n, 1), y = coord::y_poly(n, 1);
  EXPECT_EQ(d_c(PolyForm::scalar(n, coord::t_poly(n))),
            q(-1, 2) * (y * cov(dx(n, 1))) + q(1, 2) * (x * cov(dy(n, 1))));
  EXPECT_TRUE(d_c(y * cov(dx(n, 1))).is_zero());
  EXPECT_EQ(d_c((x * x) * cov(dy(n, 1))), q(2) * cov(wedge(dx(n, 1), theta(n))));
  EXPECT_EQ(pi_E((x * x) * cov(dy(n, 1))), (x * x) * cov(dy(n, 1)) + q(2) * (x * cov(theta(n))));
}

TEST(Rumin, DcRejectsSectionsOutsideE0) {
  EXPECT_THROW(d_c(cov(theta(1))), NotInE0);
  EXPECT_THROW(d_c(coord::t_poly(2) * cov(wedge(dx(2, 1), dy(2, 1)))), NotInE0);
}

TEST(Rumin, ComplexProperties) {
  Battery b(61);
  for (int i = 0; i < 40; ++i) {
    const int n = 1 + i % 2;
    const RuminOperators& ops = RuminOperators::cached(n);
    const int h = static_cast<int>(b.integer(0, 2 * n - 1));
    const PolyForm a = b.form(n, h, 3);
    const PolyForm pa = ops.pi_E(a);
    EXPECT_EQ(ops.pi_E(pa), pa);
    EXPECT_EQ(exterior_d(pa), ops.pi_E(exterior_d(a)));
    EXPECT_EQ(ops.pi_E(ops.apply_pi_E0(pa)), pa);
    const PolyForm g = b.e0_section(ops, h, 3);
    EXPECT_TRUE(ops.in_E0(g));
    EXPECT_TRUE(ops.in_E0(ops.d_c(g)));
    if (h + 1 <= 2 * n) EXPECT_TRUE(ops.d_c(ops.d_c(g)).is_zero());
    EXPECT_EQ(ops.apply_pi_E0(ops.pi_E(g)), g);
  }
}

TEST(Rumin, PiEOnLowDegreeE0IsOneStepCorrection) {
  Battery b(67);
  for (int i = 0; i < 30; ++i) {
    const int n = 1 + i % 2;
    const RuminOperators& ops = RuminOperators::cached(n);
    const int h = static_cast<int>(b.integer(0, 2 * n + 1));
    const PolyForm g = b.e0_section(ops, h, 3);
    const PolyForm expected = h <= n ? g - ops.apply_d0_pinv(d_weight_part(g, 1)) : g;
    EXPECT_EQ(ops.pi_E(g), expected);
  }
}

TEST(Rumin, DcLowersCoefficientWeightByOneOrTwo) {
  for (int n = 1; n <= 2; ++n) {
    const RuminOperators& ops = RuminOperators::cached(n);
    const std::vector<int> w = coord::weights(n);
    for (int h = 0; h <= 2 * n; ++h) {
      const int order = h == n ? 2 : 1;
      for (const MultiCovector& e : e0_basis(n, h).elements) {
        for (int ex = 0; ex <= 2; ++ex)
          for (int et = 0; et <= 1; ++et) {
            Exponents exps{};
            exps[0] = static_cast<std::uint8_t>(ex);
            exps[static_cast<std::size_t>(n)] = 1;
            exps[static_cast<std::size_t>(2 * n)] = static_cast<std::uint8_t>(et);
            const Polynomial f = Polynomial::monomial(2 * n + 1, exps);
            const int weight = f.weighted_degree(w);
            const PolyForm dg = ops.d_c(f * PolyForm::from_covector(e));
            for (const auto& [m, c] : dg.terms()) {
              EXPECT_EQ(c.weighted_degree(w), weight - order);
              EXPECT_EQ(c.min_weighted_degree(w), weight - order);
            }
          }
      }
    }
  }
}

TEST(Rumin, DcCommutesWithDilation) {
  Battery b(73);
  for (int i = 0; i < 20; ++i) {
    const int n = 1 + i % 2;
    const RuminOperators& ops = RuminOperators::cached(n);
    const int h = static_cast<int>(b.integer(0, 2 * n));
    const PolyForm g = b.e0_section(ops, h, 2);
    const Rational l = b.scale();
    EXPECT_EQ(ops.d_c(dilation_pullback(l, g)), dilation_pullback(l, ops.d_c(g)));
  }
}

TEST(Rumin, ParsedFormsAgreeWithConstructedForms) {
  const int n = 1;
  const Polynomial x = coord::x_poly(n, 1);
  EXPECT_EQ(parse_form(n, "x**2*dy"), (x * x) * cov(dy(n, 1)));
  EXPECT_EQ(parse_form(n, "theta^dx"), cov(wedge(theta(n), dx(n, 1))));
}
