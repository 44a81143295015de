#pragma once

#include "heisenberg/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace heis {

/// The curve f(x) = (x, 0, int_0^x u) in H^1 with u = sqrt(dist(x, A)), where A
/// is the stage-`levels` Cantor set obtained from [0,1] by removing, at stage
/// j, a centered open gap of length r_j from each of the 2^j remaining
/// intervals.
class CantorCurve {
public:
  struct Gap {
    int stage = 0;
    double left = 0;
    double right = 0;
  };

  /// Gap lengths r_j = 2^{-exponent j} / 8.
  static std::vector<double> default_gaps(int levels, const Rational& exponent = Rational(4, 3));

  /// Throws std::invalid_argument unless levels >= 1, r_j > 0 and
  /// sum 2^j r_j < 1. With `degenerate` A is all of [0,1] and u = 0.
  CantorCurve(int levels, std::vector<double> gaps, bool degenerate = false);

  int levels() const { return levels_; }
  bool degenerate() const { return degenerate_; }
  const std::vector<double>& gap_lengths() const { return gaps_; }
  /// Every removed gap, sorted by left endpoint.
  const std::vector<Gap>& gaps() const { return removed_; }
  /// The retained intervals of A, sorted.
  const std::vector<std::pair<double, double>>& intervals() const { return intervals_; }

  double u(double x) const;
  std::array<double, 3> point(double x) const;
  std::array<double, 3> derivative(double x) const;
  /// Contact form theta = dt - (x dy - y dx)/2 at f(x) applied to f'(x).
  double theta_of_derivative(double x) const;
  /// Points of A used for the horizontality check: endpoints and midpoints
  /// of the retained intervals.
  std::vector<double> samples_on_A() const;

  /// Closed form of int over a gap of length r of sqrt(dist): (4/3)(r/2)^{3/2}.
  static double gap_displacement(double r);

private:
  int levels_;
  bool degenerate_;
  std::vector<double> gaps_;
  std::vector<Gap> removed_;
  std::vector<std::pair<double, double>> intervals_;
  std::vector<double> t_before_; // t at the left end of each removed gap
};

struct CantorStage {
  int stage = 0;
  double gap_length = 0;
  /// t across the leftmost gap of this stage.
  double displacement = 0;
  /// displacement / 2^{-2 stage}.
  double ratio = 0;
  /// max |theta(f')| over the endpoints of the gaps of this stage.
  double max_abs_theta_on_A = 0;
};

struct CantorReport {
  std::vector<CantorStage> stages;
  /// max |theta(f')| over all sample points of A.
  double max_abs_theta_on_A = 0;
  /// max |theta(f'(x)) - u(x)| over a grid of [0,1] and the samples of A.
  double max_theta_minus_u = 0;
};

CantorReport cantor_report(const CantorCurve& curve);
/// CSV with header stage,gap_length,displacement,ratio,max_abs_theta_on_A.
std::string cantor_csv(const CantorReport& report);

} // namespace heis
