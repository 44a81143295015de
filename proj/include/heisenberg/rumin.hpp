#pragma once

#include "heisenberg/graded_operator.hpp"
#include "heisenberg/poly_form.hpp"

#include <stdexcept>
#include <vector>

namespace heis {

struct BuildOptions {
  /// Test hook: flips the sign of dtheta inside the d0 matrix only, leaving
  /// exterior_d untouched. Used as a negative control for the identity suite.
  bool corrupt_dtheta_sign = false;
};

/// Thrown by d_c when its argument is not a section of E0.
class NotInE0 : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Spanning set of E0^h together with the projector block at degree h.
struct RuminBasis {
  int n = 0;
  int degree = 0;
  std::vector<MultiCovector> elements;
  RationalMatrix projector;
};

/// The algebraic operators d0, d0^{-1}, Pi_E0 of one group rank, all exact, and
/// the differential operators built from them.
class RuminOperators {
public:
  static RuminOperators build(int n, BuildOptions options = {});
  /// Shared read-only instance, built once per rank.
  static const RuminOperators& cached(int n);

  int rank() const { return n_; }
  const BuildOptions& options() const { return options_; }

  /// Block k -> k+1 for every k in 0..2n+1.
  const GradedOperator& d0() const { return d0_; }
  /// Block k -> k-1 for every k in 1..2n+1; Moore-Penrose inverse of d0.
  const GradedOperator& d0_pinv() const { return d0_pinv_; }
  /// Orthogonal projector onto E0 in each degree.
  const GradedOperator& pi_E0() const { return pi_E0_; }

  MultiCovector apply_d0(const MultiCovector& a) const;
  MultiCovector apply_d0_pinv(const MultiCovector& a) const;
  MultiCovector apply_pi_E0(const MultiCovector& a) const;

  PolyForm apply_d0_pinv(const PolyForm& a) const;
  PolyForm apply_pi_E0(const PolyForm& a) const;
  /// a - d0^{-1} d a - d d0^{-1} a.
  PolyForm pi_E(const PolyForm& a) const;
  bool in_E0(const PolyForm& a) const;
  /// Pi_E0 d Pi_E; throws NotInE0 unless Pi_E0 fixes the input exactly.
  PolyForm d_c(const PolyForm& a) const;

private:
  int n_ = 0;
  BuildOptions options_;
  GradedOperator d0_;
  GradedOperator d0_pinv_;
  GradedOperator pi_E0_;
};

GradedOperator d0_matrix(int n);
GradedOperator d0_pinv(int n);
GradedOperator pi_E0(int n);

/// E0^h from an independent description: primitive horizontal covectors
/// (kernel of L^{n-h+1}) for h <= n, theta ^ (kernel of L in degree h-1)
/// for h > n.
RuminBasis e0_basis(int n, int h);

PolyForm pi_E(const PolyForm& a);
PolyForm d_c(const PolyForm& a);

} // namespace heis
