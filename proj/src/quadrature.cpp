#include "heisenberg/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace heis {

GaussRule1D gauss_legendre(int order) {
  if (order < 1 || order > 128) throw std::invalid_argument("quadrature order must be in 1..128");
  GaussRule1D rule;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    // Newton iteration on P_order from the Chebyshev-like initial guess
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 1;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    const auto k = static_cast<std::size_t>(i);
    rule.nodes[k] = 0.5 * (1 - x);
    rule.weights[k] = 1.0 / ((1 - x * x) * dp * dp);
  }
  return rule;
}

QuadratureRule make_rule(Domain domain, int dim, int order) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  QuadratureRule rule;
  if (dim == 0) {
    rule.points.push_back({});
    rule.weights.push_back(1);
    return rule;
  }
  const GaussRule1D g = gauss_legendre(order);
  const std::size_t m = g.nodes.size();
  std::vector<std::size_t> idx(static_cast<std::size_t>(dim), 0);
  while (true) {
    std::vector<double> v(static_cast<std::size_t>(dim));
    double w = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = g.nodes[idx[i]];
      w *= g.weights[idx[i]];
    }
    if (domain == Domain::simplex) {
      // u_i = v_i prod_{j<i} (1 - v_j), Jacobian prod_i (1 - v_i)^{dim-1-i}
      std::vector<double> u(v.size());
      double scale = 1;
      for (std::size_t i = 0; i < v.size(); ++i) {
        u[i] = v[i] * scale;
        w *= std::pow(1 - v[i], static_cast<double>(v.size() - 1 - i));
        scale *= 1 - v[i];
      }
      v = std::move(u);
    }
    rule.points.push_back(std::move(v));
    rule.weights.push_back(w);
    std::size_t d = 0;
    while (d < idx.size() && ++idx[d] == m) idx[d++] = 0;
    if (d == idx.size()) break;
  }
  return rule;
}

} // namespace heis
