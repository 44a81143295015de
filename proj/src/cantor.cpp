#include "heisenberg/cantor.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <stdexcept>

namespace heis {

std::vector<double> CantorCurve::default_gaps(int levels, const Rational& exponent) {
  std::vector<double> r;
  for (int j = 0; j < levels; ++j) r.push_back(std::exp2(-to_double(exponent) * j) / 8);
  return r;
}

double CantorCurve::gap_displacement(double r) { return 4.0 / 3.0 * std::pow(r / 2, 1.5); }

CantorCurve::CantorCurve(int levels, std::vector<double> gaps, bool degenerate)
    : levels_(levels), degenerate_(degenerate), gaps_(std::move(gaps)) {
  if (levels < 1) throw std::invalid_argument("levels must be at least 1");
  if (static_cast<int>(gaps_.size()) != levels)
    throw std::invalid_argument(fmt::format("expected {} gap lengths, got {}", levels, gaps_.size()));
  double total = 0;
  for (int j = 0; j < levels; ++j) {
    const double r = gaps_[static_cast<std::size_t>(j)];
    if (!(r > 0)) throw std::invalid_argument(fmt::format("gap length r_{} must be positive", j));
    total += std::ldexp(r, j);
  }
  if (!(total < 1)) throw std::invalid_argument(fmt::format("invalid gaps: sum 2^j r_j = {} is not below 1", total));

  intervals_ = {{0.0, 1.0}};
  if (degenerate_) return;
  for (int j = 0; j < levels; ++j) {
    const double r = gaps_[static_cast<std::size_t>(j)];
    std::vector<std::pair<double, double>> next;
    for (const auto& [a, b] : intervals_) {
      const double c = (a + b) / 2;
      removed_.push_back({j, c - r / 2, c + r / 2});
      next.emplace_back(a, c - r / 2);
      next.emplace_back(c + r / 2, b);
    }
    intervals_ = std::move(next);
  }
  std::sort(removed_.begin(), removed_.end(), [](const Gap& a, const Gap& b) { return a.left < b.left; });
  double t = 0;
  for (const auto& g : removed_) {
    t_before_.push_back(t);
    t += gap_displacement(g.right - g.left);
  }
}

double CantorCurve::u(double x) const {
  auto it = std::upper_bound(removed_.begin(), removed_.end(), x, [](double v, const Gap& g) { return v < g.left; });
  if (it == removed_.begin()) return 0;
  --it;
  if (x >= it->right) return 0;
  return std::sqrt(std::min(x - it->left, it->right - x));
}

std::array<double, 3> CantorCurve::point(double x) const {
  auto it = std::upper_bound(removed_.begin(), removed_.end(), x, [](double v, const Gap& g) { return v < g.left; });
  if (it == removed_.begin()) return {x, 0, 0};
  --it;
  const auto i = static_cast<std::size_t>(it - removed_.begin());
  const double r = it->right - it->left;
  double t = t_before_[i];
  if (x >= it->right) {
    t += gap_displacement(r);
  } else if (x - it->left <= r / 2) {
    t += 2.0 / 3.0 * std::pow(x - it->left, 1.5);
  } else {
    t += gap_displacement(r) - 2.0 / 3.0 * std::pow(it->right - x, 1.5);
  }
  return {x, 0, t};
}

std::array<double, 3> CantorCurve::derivative(double x) const { return {1, 0, u(x)}; }

double CantorCurve::theta_of_derivative(double x) const {
  const auto p = point(x);
  const auto v = derivative(x);
  return v[2] - 0.5 * (p[0] * v[1] - p[1] * v[0]);
}

std::vector<double> CantorCurve::samples_on_A() const {
  std::vector<double> s;
  for (const auto& [a, b] : intervals_) {
    s.push_back(a);
    s.push_back((a + b) / 2);
    s.push_back(b);
  }
  return s;
}

CantorReport cantor_report(const CantorCurve& curve) {
  CantorReport rep;
  for (double x : curve.samples_on_A()) {
    rep.max_abs_theta_on_A = std::max(rep.max_abs_theta_on_A, std::fabs(curve.theta_of_derivative(x)));
    rep.max_theta_minus_u = std::max(rep.max_theta_minus_u, std::fabs(curve.theta_of_derivative(x) - curve.u(x)));
  }
  constexpr int grid = 4096;
  for (int i = 0; i <= grid; ++i) {
    const double x = static_cast<double>(i) / grid;
    rep.max_theta_minus_u = std::max(rep.max_theta_minus_u, std::fabs(curve.theta_of_derivative(x) - curve.u(x)));
  }
  for (int j = 0; j < curve.levels(); ++j) {
    CantorStage st;
    st.stage = j;
    const CantorCurve::Gap* leftmost = nullptr;
    for (const auto& g : curve.gaps()) {
      if (g.stage != j) continue;
      if (!leftmost) leftmost = &g;
      st.max_abs_theta_on_A = std::max({st.max_abs_theta_on_A, std::fabs(curve.theta_of_derivative(g.left)),
                                        std::fabs(curve.theta_of_derivative(g.right))});
    }
    if (leftmost) {
      st.gap_length = leftmost->right - leftmost->left;
      st.displacement = curve.point(leftmost->right)[2] - curve.point(leftmost->left)[2];
    }
    st.ratio = std::ldexp(st.displacement, 2 * j);
    rep.stages.push_back(st);
  }
  return rep;
}

std::string cantor_csv(const CantorReport& report) {
  std::string out = "stage,gap_length,displacement,ratio,max_abs_theta_on_A\n";
  for (const auto& s : report.stages)
    out += fmt::format("{},{:.17g},{:.17g},{:.17g},{:.17g}\n", s.stage, s.gap_length, s.displacement, s.ratio,
                       s.max_abs_theta_on_A);
  return out;
}

} // namespace heis
