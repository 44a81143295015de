#include "heisenberg/exterior.hpp"
#include "heisenberg/graded_operator.hpp"
#include "heisenberg/group.hpp"
#include "heisenberg/matrix.hpp"
#include "heisenberg/poly_form.hpp"
#include "heisenberg/random.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace heis;

namespace {

Rational q(long p, long d = 1) { return ratio(p, d); }

// Brute-force sign of the permutation sorting the concatenated index lists.
int permutation_sign(std::vector<int> idx) {
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  return sign;
}

std::vector<int> indices(Mask m) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (m & (Mask{1} << i)) out.push_back(i);
  return out;
}

} // namespace

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3"), q(3));
  EXPECT_EQ(parse_rational("-7/2"), q(-7, 2));
  EXPECT_EQ(parse_rational("0.125"), q(1, 8));
  EXPECT_EQ(parse_rational("4/6"), q(2, 3));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Matrix, PseudoInverseSatisfiesMoorePenroseConditions) {
  Battery b(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t r = static_cast<std::size_t>(b.integer(1, 5));
    const std::size_t c = static_cast<std::size_t>(b.integer(1, 5));
    RationalMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = b.integer(0, 2) == 0 ? Rational(0) : b.rational();
    const RationalMatrix p = a.pseudo_inverse();
    EXPECT_EQ(a * p * a, a);
    EXPECT_EQ(p * a * p, p);
    EXPECT_EQ((a * p).transpose(), a * p);
    EXPECT_EQ((p * a).transpose(), p * a);
  }
}

TEST(Matrix, KernelAndRank) {
  RationalMatrix a(2, 3);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 2;
  a(1, 1) = 4;
  a(1, 2) = 1;
  EXPECT_EQ(a.rank(), 2u);
  const RationalMatrix k = a.kernel_basis();
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_TRUE((a * k).is_zero());
  EXPECT_TRUE(same_kernel(a, q(3) * a));
  EXPECT_TRUE(same_column_space(a, a * RationalMatrix::identity(3)));
}

TEST(Group, LawExamples) {
  EXPECT_EQ(group_mul(make_point({1, 0, 0}), make_point({0, 1, 0})), make_point({1, 1, q(1, 2)}));
  EXPECT_EQ(group_mul(make_point({0, 1, 0}), make_point({1, 0, 0})), make_point({1, 1, q(-1, 2)}));
  const GroupPoint p = make_point({3, q(-1, 2), 7});
  EXPECT_EQ(group_mul(GroupPoint::identity(1), p), p);
  EXPECT_EQ(group_mul(p, GroupPoint::identity(1)), p);
  EXPECT_EQ(group_mul(p, inverse(p)), GroupPoint::identity(1));
  EXPECT_THROW(group_mul(p, GroupPoint::identity(2)), std::invalid_argument);
}

TEST(Group, AssociativityAndDilationsAreHomomorphisms) {
  Battery b(5);
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + i % 3;
    auto point = [&] {
      std::vector<Rational> c;
      for (int j = 0; j < 2 * n + 1; ++j) c.push_back(b.rational());
      return GroupPoint::from_coordinates(c);
    };
    const GroupPoint p = point(), r = point(), s = point();
    EXPECT_EQ(group_mul(group_mul(p, r), s), group_mul(p, group_mul(r, s)));
    const Rational l = b.scale(), m = b.scale();
    EXPECT_EQ(dilate_point(l, group_mul(p, r)), group_mul(dilate_point(l, p), dilate_point(l, r)));
    EXPECT_EQ(dilate_point(l, dilate_point(m, p)), dilate_point(Rational(l * m), p));
    EXPECT_EQ(koranyi_norm4(dilate_point(l, p)), pow(l, 4) * koranyi_norm4(p));
    // left invariance of the gauge distance
    EXPECT_EQ(koranyi_distance4(group_mul(s, p), group_mul(s, r)), koranyi_distance4(p, r));
  }
}

TEST(Group, DilationExamples) {
  EXPECT_EQ(dilate_point(q(2), make_point({1, 0, 1})), make_point({2, 0, 4}));
  const GroupPoint p = make_point({q(1, 3), 5, -2});
  EXPECT_EQ(dilate_point(q(1), p), p);
  EXPECT_EQ(dilate_point(q(3), GroupPoint::identity(1)), GroupPoint::identity(1));
  EXPECT_THROW(dilate_point(q(0), p), std::invalid_argument);
  EXPECT_THROW(dilate_point(q(-1), p), std::invalid_argument);
}

TEST(Group, GaugeExamples) {
  EXPECT_DOUBLE_EQ(koranyi_norm(make_point({1, 0, 0})), 1.0);
  EXPECT_DOUBLE_EQ(koranyi_norm(make_point({0, 0, 1})), 2.0);
  EXPECT_DOUBLE_EQ(koranyi_norm(make_point({1, 1, 0})), std::sqrt(2.0));
}

TEST(Group, FrameChange) {
  EXPECT_EQ(frame_change(GroupPoint::identity(2)), RationalMatrix::identity(5));
  // columns are the coordinate vectors d/dx, d/dy, d/dt in frame components
  const RationalMatrix a = frame_change(make_point({0, 2, 0}));
  EXPECT_EQ(a.apply({1, 0, 0}), (std::vector<Rational>{1, 0, 1}));
  const RationalMatrix b = frame_change(make_point({4, 0, 0}));
  EXPECT_EQ(b.apply({0, 1, 0}), (std::vector<Rational>{0, 1, -2}));
  // theta on a coordinate vector equals the Z row
  const GroupPoint p = make_point({q(1, 2), 3, 1});
  const std::vector<Rational> v{2, -1, 5};
  const Rational theta_v = v[2] - q(1, 2) * (p.x[0] * v[1] - p.y[0] * v[0]);
  EXPECT_EQ(frame_change(p).apply(v)[2], theta_v);
}

TEST(Exterior, WedgeExamplesAndSigns) {
  const int n = 1;
  EXPECT_EQ(wedge(dx(n, 1), dy(n, 1)), MultiCovector::monomial(n, 0b011));
  EXPECT_TRUE(wedge(dx(n, 1), dx(n, 1)).is_zero());
  EXPECT_EQ(wedge(theta(n), wedge(dx(n, 1), dy(n, 1))), MultiCovector::monomial(n, full_volume(n)));
  // every pair of monomials against the permutation-sign oracle, n = 2
  for (int a = 0; a < 5; ++a)
    for (Mask ma : monomial::basis(2, a))
      for (int b = 0; b + a <= 5; ++b)
        for (Mask mb : monomial::basis(2, b)) {
          std::vector<int> idx = indices(ma);
          const auto ib = indices(mb);
          idx.insert(idx.end(), ib.begin(), ib.end());
          EXPECT_EQ(monomial::wedge_sign(ma, mb), permutation_sign(idx));
        }
}

TEST(Exterior, GradedCommutativityAndAssociativity) {
  Battery b(3);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + i % 3;
    const int da = static_cast<int>(b.integer(0, 3)), db = static_cast<int>(b.integer(0, 3)),
              dc = static_cast<int>(b.integer(0, 2));
    const MultiCovector x = b.covector(n, da), y = b.covector(n, db), z = b.covector(n, dc);
    const MultiCovector xy = wedge(x, y);
    EXPECT_EQ(wedge(y, x), (da * db) % 2 == 0 ? xy : -xy);
    EXPECT_EQ(wedge(wedge(x, y), z), wedge(x, wedge(y, z)));
  }
}

TEST(Exterior, WeightsAndDilationPullback) {
  const int n = 1;
  EXPECT_EQ(dilation_pullback(q(2), theta(n)), q(4) * theta(n));
  EXPECT_EQ(dilation_pullback(q(2), wedge(dx(n, 1), dy(n, 1))), q(4) * wedge(dx(n, 1), dy(n, 1)));
  EXPECT_EQ(dilation_pullback(q(2), wedge(theta(n), dx(n, 1))), q(8) * wedge(theta(n), dx(n, 1)));
  EXPECT_THROW(dilation_pullback(q(0), theta(n)), std::invalid_argument);
  Battery b(9);
  for (int i = 0; i < 30; ++i) {
    const MultiCovector a = b.covector(2, i % 6);
    const Rational l = b.scale(), m = b.scale();
    EXPECT_EQ(dilation_pullback(l, dilation_pullback(m, a)), dilation_pullback(Rational(l * m), a));
  }
}

TEST(Exterior, WeightSplit) {
  const int n = 1;
  auto [h1, v1] = weight_split(theta(n));
  EXPECT_TRUE(h1.is_zero());
  EXPECT_EQ(v1, theta(n));
  const MultiCovector a = dx(n, 1) + q(3) * theta(n);
  auto [h2, v2] = weight_split(a);
  EXPECT_EQ(h2, dx(n, 1));
  EXPECT_EQ(v2, q(3) * theta(n));
  EXPECT_EQ(inner_product(h2, v2), 0);
}

TEST(Exterior, DthetaSignConvention) {
  EXPECT_EQ(dtheta(2), -(wedge(dx(2, 1), dy(2, 1)) + wedge(dx(2, 2), dy(2, 2))));
}

TEST(Exterior, LefschetzExamplesAndAdjointness) {
  const int n = 2;
  EXPECT_EQ(lefschetz(dx(n, 1), Lefschetz::raise), -wedge(wedge(dx(n, 1), dx(n, 2)), dy(n, 2)));
  EXPECT_TRUE(lefschetz(MultiCovector::one(n), Lefschetz::lower).is_zero());
  const MultiCovector l = lefschetz(dtheta(n), Lefschetz::lower);
  EXPECT_EQ(l, q(2) * MultiCovector::one(n));
  EXPECT_THROW(lefschetz(theta(n), Lefschetz::raise), std::invalid_argument);
  Battery b(17);
  for (int i = 0; i < 40; ++i) {
    const int k = static_cast<int>(b.integer(2, 4));
    const MultiCovector a = weight_split(b.covector(n, k)).first;
    const MultiCovector c = weight_split(b.covector(n, k - 2)).first;
    EXPECT_EQ(inner_product(lefschetz(a, Lefschetz::lower), c), inner_product(a, lefschetz(c, Lefschetz::raise)));
  }
}

TEST(Exterior, HodgeStar) {
  EXPECT_EQ(hodge_star_h(dx(1, 1)), dy(1, 1));
  EXPECT_EQ(hodge_star_h(dy(1, 1)), -dx(1, 1));
  EXPECT_EQ(hodge_star_h(MultiCovector::one(2)), MultiCovector::monomial(2, horizontal_volume(2)));
  EXPECT_THROW(hodge_star_h(theta(1)), std::invalid_argument);
  Battery b(23);
  for (int i = 0; i < 60; ++i) {
    const int n = 1 + i % 3;
    const int k = static_cast<int>(b.integer(0, 2 * n));
    const MultiCovector a = weight_split(b.covector(n, k)).first;
    const MultiCovector c = weight_split(b.covector(n, k)).first;
    const int sign = (k * (2 * n - k)) % 2 == 0 ? 1 : -1;
    EXPECT_EQ(hodge_star_h(hodge_star_h(a)), Rational(sign) * a);
    EXPECT_EQ(wedge(a, hodge_star_h(c)), inner_product(a, c) * MultiCovector::monomial(n, horizontal_volume(n)));
  }
}

TEST(GradedOperator, AdjointAndComposition) {
  for (int n = 1; n <= 3; ++n) {
    const GradedOperator l = lefschetz_operator(n);
    EXPECT_EQ(l.adjoint().adjoint(), l);
    const GradedOperator lam = lambda_operator(n);
    EXPECT_EQ(lam, l.adjoint());
    // star Lambda = L star as block identities wherever both sides are defined
    const GradedOperator lhs = compose(hodge_operator(n), lam);
    const GradedOperator rhs = compose(l, hodge_operator(n));
    for (const auto& [k, block] : lhs.blocks()) {
      const auto* other = rhs.block(k);
      if (other) EXPECT_EQ(block.matrix, other->matrix) << "degree " << k;
    }
  }
  GradedOperator g(1, Space::full);
  EXPECT_THROW(g.apply(theta(1)), std::invalid_argument);
}

TEST(Frame, BracketTable) {
  // [X_i, Y_i] = Z and all other brackets vanish, on coordinate functions.
  const int n = 2;
  std::vector<FrameField> fields;
  for (int i = 1; i <= n; ++i) fields.push_back({FrameField::X, i});
  for (int i = 1; i <= n; ++i) fields.push_back({FrameField::Y, i});
  fields.push_back({FrameField::Z, 0});
  std::vector<Polynomial> coords;
  for (int v = 0; v < 2 * n + 1; ++v) coords.push_back(Polynomial::variable(2 * n + 1, v));
  for (std::size_t a = 0; a < fields.size(); ++a)
    for (std::size_t b = 0; b < fields.size(); ++b)
      for (const auto& f : coords) {
        const Polynomial br = horiz_derive(n, horiz_derive(n, f, fields[b]), fields[a]) -
                              horiz_derive(n, horiz_derive(n, f, fields[a]), fields[b]);
        Polynomial expected(2 * n + 1);
        const auto za = horiz_derive(n, f, fields.back());
        if (fields[a].kind == FrameField::X && fields[b].kind == FrameField::Y && fields[a].index == fields[b].index)
          expected = za;
        if (fields[a].kind == FrameField::Y && fields[b].kind == FrameField::X && fields[a].index == fields[b].index)
          expected = -za;
        EXPECT_EQ(br, expected);
      }
}
