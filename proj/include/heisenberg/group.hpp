#pragma once

#include "heisenberg/matrix.hpp"
#include "heisenberg/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace heis {

/// A point (x, y, t) of the Heisenberg group H^n in exponential coordinates.
/// The scalar is either Rational (exact) or double.
template <typename Scalar>
struct BasicGroupPoint {
  std::vector<Scalar> x;
  std::vector<Scalar> y;
  Scalar t{};

  static BasicGroupPoint identity(int n) {
    return {std::vector<Scalar>(static_cast<std::size_t>(n)),
            std::vector<Scalar>(static_cast<std::size_t>(n)), Scalar{}};
  }

  int rank() const { return static_cast<int>(x.size()); }

  /// Coordinates in the order x_1..x_n, y_1..y_n, t.
  std::vector<Scalar> coordinates() const {
    std::vector<Scalar> c(x);
    c.insert(c.end(), y.begin(), y.end());
    c.push_back(t);
    return c;
  }

  static BasicGroupPoint from_coordinates(const std::vector<Scalar>& c) {
    if (c.size() % 2 == 0) throw std::invalid_argument("coordinate vector must have odd length 2n+1");
    const std::size_t n = c.size() / 2;
    BasicGroupPoint p;
    p.x.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n));
    p.y.assign(c.begin() + static_cast<std::ptrdiff_t>(n), c.begin() + static_cast<std::ptrdiff_t>(2 * n));
    p.t = c.back();
    return p;
  }

  friend bool operator==(const BasicGroupPoint&, const BasicGroupPoint&) = default;
};

using GroupPoint = BasicGroupPoint<Rational>;
using GroupPointD = BasicGroupPoint<double>;

namespace detail {
template <typename Scalar>
void check_same_rank(const BasicGroupPoint<Scalar>& p, const BasicGroupPoint<Scalar>& q) {
  if (p.x.size() != q.x.size() || p.y.size() != p.x.size() || q.y.size() != q.x.size())
    throw std::invalid_argument("group points of different rank");
}
} // namespace detail

/// p . q = (x+x', y+y', t+t' + 1/2 sum_j (x_j y'_j - y_j x'_j)).
template <typename Scalar>
BasicGroupPoint<Scalar> group_mul(const BasicGroupPoint<Scalar>& p, const BasicGroupPoint<Scalar>& q) {
  detail::check_same_rank(p, q);
  BasicGroupPoint<Scalar> r = p;
  Scalar twist{};
  for (std::size_t j = 0; j < p.x.size(); ++j) {
    r.x[j] = p.x[j] + q.x[j];
    r.y[j] = p.y[j] + q.y[j];
    twist += p.x[j] * q.y[j] - p.y[j] * q.x[j];
  }
  r.t = p.t + q.t + twist / Scalar(2);
  return r;
}

template <typename Scalar>
BasicGroupPoint<Scalar> inverse(const BasicGroupPoint<Scalar>& p) {
  BasicGroupPoint<Scalar> r = p;
  for (auto& v : r.x) v = -v;
  for (auto& v : r.y) v = -v;
  r.t = -r.t;
  return r;
}

/// Anisotropic dilation (lambda x, lambda y, lambda^2 t); lambda must be positive.
template <typename Scalar>
BasicGroupPoint<Scalar> dilate_point(const Scalar& lambda, const BasicGroupPoint<Scalar>& p) {
  if (!(lambda > 0)) throw std::invalid_argument("dilation factor must be positive");
  BasicGroupPoint<Scalar> r = p;
  for (auto& v : r.x) v *= lambda;
  for (auto& v : r.y) v *= lambda;
  r.t *= lambda * lambda;
  return r;
}

/// |p_bar|^4 + 16 t^2, the fourth power of the Cygan-Koranyi gauge. Exact for
/// rational points.
template <typename Scalar>
Scalar koranyi_norm4(const BasicGroupPoint<Scalar>& p) {
  Scalar sq{};
  for (const auto& v : p.x) sq += v * v;
  for (const auto& v : p.y) sq += v * v;
  return sq * sq + Scalar(16) * p.t * p.t;
}

template <typename Scalar>
double koranyi_norm(const BasicGroupPoint<Scalar>& p) {
  double v4;
  if constexpr (std::is_same_v<Scalar, Rational>) {
    v4 = koranyi_norm4(p).get_d();
  } else {
    v4 = static_cast<double>(koranyi_norm4(p));
  }
  return std::sqrt(std::sqrt(v4));
}

/// d(p,q)^4 = rho(p^{-1} q)^4.
template <typename Scalar>
Scalar koranyi_distance4(const BasicGroupPoint<Scalar>& p, const BasicGroupPoint<Scalar>& q) {
  return koranyi_norm4(group_mul(inverse(p), q));
}

/// Matrix M(p) with M * (dx, dy, dt)-components = (X, Y, Z)-components of a
/// tangent vector at p: d/dx_i -> X_i + (y_i/2) Z, d/dy_i -> Y_i - (x_i/2) Z,
/// d/dt -> Z. Its last row is theta evaluated on coordinate vectors.
template <typename Scalar>
std::vector<std::vector<Scalar>> frame_change_rows(const BasicGroupPoint<Scalar>& p) {
  const std::size_t n = p.x.size();
  const std::size_t d = 2 * n + 1;
  std::vector<std::vector<Scalar>> m(d, std::vector<Scalar>(d));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = Scalar(1);
  for (std::size_t j = 0; j < n; ++j) {
    m[2 * n][j] = p.y[j] / Scalar(2);
    m[2 * n][n + j] = -p.x[j] / Scalar(2);
  }
  return m;
}

inline RationalMatrix frame_change(const GroupPoint& p) {
  auto rows = frame_change_rows(p);
  RationalMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

GroupPoint make_point(std::initializer_list<Rational> coordinates);

} // namespace heis
