#include "heisenberg/chain.hpp"
#include "heisenberg/expression.hpp"
#include "heisenberg/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace heis;

namespace {

const std::string kData = HEIS_TEST_DATA;

double integrate(const QuadratureRule& r, const std::function<double(const std::vector<double>&)>& f) {
  double s = 0;
  for (std::size_t i = 0; i < r.points.size(); ++i) s += r.weights[i] * f(r.points[i]);
  return s;
}

} // namespace

TEST(Quadrature, GaussLegendreIsExactUpToDegreeTwoOrderMinusOne) {
  for (int order = 1; order <= 12; ++order) {
    const GaussRule1D g = gauss_legendre(order);
    ASSERT_EQ(g.nodes.size(), static_cast<std::size_t>(order));
    for (int p = 0; p <= 2 * order - 1; ++p) {
      double s = 0;
      for (int i = 0; i < order; ++i) s += g.weights[i] * std::pow(g.nodes[i], p);
      EXPECT_NEAR(s, 1.0 / (p + 1), 1e-14) << "order " << order << " power " << p;
    }
  }
}

TEST(Quadrature, CubeAndSimplexRules) {
  const auto cube = make_rule(Domain::cube, 2, 4);
  EXPECT_NEAR(integrate(cube, [](const auto& u) { return u[0] * u[1] * u[1]; }), 1.0 / 6, 1e-15);
  const auto tri = make_rule(Domain::simplex, 2, 6);
  EXPECT_NEAR(integrate(tri, [](const auto&) { return 1.0; }), 0.5, 1e-15);
  EXPECT_NEAR(integrate(tri, [](const auto& u) { return u[0] * u[1]; }), 1.0 / 24, 1e-15);
  const auto tet = make_rule(Domain::simplex, 3, 6);
  // int x^2 y z over the standard tetrahedron = 2! 1! 1! / 7! = 1/2520
  EXPECT_NEAR(integrate(tet, [](const auto& u) { return u[0] * u[0] * u[1] * u[2]; }), 1.0 / 2520, 1e-16);
  const auto point = make_rule(Domain::cube, 0, 8);
  ASSERT_EQ(point.weights.size(), 1u);
  EXPECT_EQ(point.weights[0], 1.0);
  for (const auto& p : tri.points) EXPECT_LE(p[0] + p[1], 1.0 + 1e-15);
}

TEST(Expression, EvaluatesAndDifferentiates) {
  const std::vector<std::string> vars{"u1", "u2"};
  const Expr e = parse_expression("sin(u1)**2 + cos(u1)**2 + u2/4", vars);
  EXPECT_NEAR(e.evaluate(std::vector<double>{0.7, 2.0}), 1.5, 1e-15);
  const Expr c = parse_expression("u1**3 - 2*u1*u2", vars);
  EXPECT_DOUBLE_EQ(c.derivative(0).evaluate(std::vector<double>{2.0, 1.0}), 10.0);
  EXPECT_DOUBLE_EQ(c.derivative(1).evaluate(std::vector<double>{2.0, 1.0}), -4.0);
  const Expr s = parse_expression("exp(u1)*sqrt(u2)", vars);
  EXPECT_NEAR(s.derivative(1).evaluate(std::vector<double>{0.0, 4.0}), 0.25, 1e-15);
}

TEST(Expression, PolynomialRecognition) {
  const std::vector<std::string> vars{"u1"};
  const auto p = parse_expression("(u1 + 1)**2 / 2", vars).to_polynomial(1);
  ASSERT_TRUE(p.has_value());
  const Polynomial u = Polynomial::variable(1, 0);
  EXPECT_EQ(*p, ratio(1, 2) * (u * u) + u + Polynomial::constant(1, ratio(1, 2)));
  EXPECT_FALSE(parse_expression("sin(u1)", vars).to_polynomial(1).has_value());
  EXPECT_FALSE(parse_expression("1/u1", vars).to_polynomial(1).has_value());
}

TEST(Expression, IntervalEnclosure) {
  const std::vector<std::string> vars{"u1"};
  const Expr e = parse_expression("u1*u1 - u1 + sin(3*u1)", vars);
  const Interval r = e.evaluate(std::vector<Interval>{{0.0, 1.0}});
  for (int i = 0; i <= 100; ++i) {
    const double v = e.evaluate(std::vector<double>{i / 100.0});
    EXPECT_LE(r.lo, v);
    EXPECT_GE(r.hi, v);
  }
}

TEST(Expression, SmoothnessCheck) {
  const std::vector<std::string> vars{"u1"};
  const std::vector<Interval> box{{0.0, 1.0}};
  EXPECT_NO_THROW(check_smooth_on(parse_expression("sqrt(1 + u1)", vars), box));
  EXPECT_NO_THROW(check_smooth_on(parse_expression("1/(2 - u1)", vars), box));
  EXPECT_THROW(check_smooth_on(parse_expression("sqrt(u1)", vars), box), ParseError);
  EXPECT_THROW(check_smooth_on(parse_expression("1/(u1 - 0.5)", vars), box), ParseError);
}

TEST(Expression, ErrorsCarryPositions) {
  try {
    parse_expression("u1 + $", {"u1"});
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 6);
  }
  EXPECT_THROW(parse_expression("u1 ^ 2", {"u1"}), ParseError);
  EXPECT_THROW(parse_expression("u3", {"u1"}), ParseError);
  EXPECT_THROW(parse_expression("tan(u1)", {"u1"}), ParseError);
  EXPECT_THROW(parse_expression("(u1", {"u1"}), ParseError);
  EXPECT_THROW(parse_expression("u1 / 0", {"u1"}), ParseError);
}

TEST(FormParser, RejectsIllFormedForms) {
  EXPECT_THROW(parse_form(1, "dx*dy"), ParseError);
  EXPECT_THROW(parse_form(1, "dx + 1"), ParseError);
  EXPECT_THROW(parse_form(1, "dx2"), ParseError);
  EXPECT_THROW(parse_form(1, "sin(x)*dx"), ParseError);
  EXPECT_THROW(parse_form(1, "dx/x"), ParseError);
  EXPECT_TRUE(parse_form(1, "dx^dx").is_zero());
  EXPECT_EQ(parse_form(2, "dx1^dy2"), -parse_form(2, "dy2^dx1"));
}

TEST(Chain, LoadsConfiguration) {
  const Chain sq = load_chain(kData + "/vertical_square.json");
  EXPECT_EQ(sq.rank(), 1);
  EXPECT_EQ(sq.dim(), 2);
  ASSERT_EQ(sq.pieces().size(), 1u);
  EXPECT_TRUE(sq.is_polynomial());
  const auto p = sq.pieces()[0].simplex.point({0.25, 0.5});
  EXPECT_EQ(p, (std::vector<double>{0.25, 0.0, 0.5}));
  EXPECT_TRUE(load_chain(kData + "/empty.json").empty());
  EXPECT_EQ(load_chain(kData + "/colegendrian_plane.json").rank(), 2);
}

TEST(Chain, ConfigurationErrors) {
  try {
    load_chain(kData + "/bad_expression.json");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("simplices[0].map[1]"), std::string::npos);
  }
  try {
    chain_from_json("{\"n\": 1,\n \"simplices\": [\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_NE(std::string(e.what()).find("invalid JSON"), std::string::npos);
  }
  EXPECT_THROW(chain_from_json(R"j({"n": 1, "simplices": [{"dim": 1, "map": ["u1", "0"]}]})j"), std::invalid_argument);
  EXPECT_THROW(chain_from_json(R"j({"n": 9, "simplices": []})j"), std::invalid_argument);
  EXPECT_THROW(chain_from_json(R"j({"n": 1, "simplices": [{"dim": 1, "map": ["u1","0","0"]},
                                                     {"dim": 2, "map": ["u1","u2","0"]}]})j"),
               std::invalid_argument);
  EXPECT_THROW(chain_from_json(R"j({"n": 1, "simplices": [{"dim": 1, "map": ["sqrt(u1)","0","0"]}]})j"), ParseError);
  EXPECT_THROW(load_chain(kData + "/missing.json"), std::runtime_error);
}

TEST(Chain, FrameJacobian) {
  // (u1, u2) -> (u1, u2, 0): d/du1 = X + (y/2) Z, d/du2 = Y - (x/2) Z
  const Chain g = chains::graph_square();
  const auto j = g.pieces()[0].simplex.frame_jacobian({0.5, 0.25});
  EXPECT_DOUBLE_EQ(j[0][0], 1.0);
  EXPECT_DOUBLE_EQ(j[1][1], 1.0);
  EXPECT_DOUBLE_EQ(j[2][0], 0.125);
  EXPECT_DOUBLE_EQ(j[2][1], -0.25);
}

TEST(Chain, BoundaryOfSegmentAndSquare) {
  const Chain b = boundary(chains::horizontal_segment());
  EXPECT_EQ(b.dim(), 0);
  ASSERT_EQ(b.pieces().size(), 2u);
  long total = 0;
  for (const auto& piece : b.pieces()) {
    const double x = piece.simplex.point({})[0];
    EXPECT_EQ(piece.coefficient, x == 1.0 ? 1 : -1);
    total += piece.coefficient;
  }
  EXPECT_EQ(total, 0);
  EXPECT_EQ(boundary(chains::vertical_square()).pieces().size(), 4u);
  EXPECT_THROW(boundary(b), std::invalid_argument);
}

TEST(Chain, DilationPushforward) {
  const Chain d = pushforward_dilation(ratio(2, 1), chains::vertical_square());
  const auto p = d.pieces()[0].simplex.point({0.5, 0.5});
  EXPECT_EQ(p, (std::vector<double>{1.0, 0.0, 2.0}));
  EXPECT_THROW(pushforward_dilation(Rational(0), d), std::invalid_argument);
  EXPECT_THROW(Chain(1, 2).add(1, ParamSimplex::parse(1, Domain::cube, {"u1", "0", "0"})), std::invalid_argument);
}
