#pragma once

#include "heisenberg/exterior.hpp"
#include "heisenberg/graded_operator.hpp"
#include "heisenberg/group.hpp"
#include "heisenberg/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace heis {

/// Coordinate box prod [lo_i, hi_i] in the 2n+1 coordinates x, y, t.
struct Box {
  std::vector<Rational> lo;
  std::vector<Rational> hi;

  static Box cube(int n, const Rational& half_width);
  int dimension() const { return static_cast<int>(lo.size()); }
};

/// Polynomial in the coordinates of H^n: variables x_1..x_n, y_1..y_n, t.
namespace coord {
inline int x(int n, int j) { (void)n; return j - 1; }
inline int y(int n, int j) { return n + j - 1; }
inline int t(int n) { return 2 * n; }
Polynomial x_poly(int n, int j);
Polynomial y_poly(int n, int j);
Polynomial t_poly(int n);
std::vector<std::string> names(int n);
/// x, y have weight 1 and t weight 2.
std::vector<int> weights(int n);
} // namespace coord

/// Left-invariant vector field used as a first-order operator.
struct FrameField {
  enum Kind { X, Y, Z } kind = Z;
  int index = 0; // 1-based for X and Y, ignored for Z
};

/// X_i = d/dx_i - y_i/2 d/dt, Y_i = d/dy_i + x_i/2 d/dt, Z = d/dt.
Polynomial horiz_derive(int n, const Polynomial& f, FrameField field);

/// Differential form sum_I f_I omega_I with polynomial coefficients in the
/// coordinates and left-invariant coframe monomials omega_I.
class PolyForm {
public:
  PolyForm() = default;
  PolyForm(int n, int degree);

  static PolyForm from_covector(const MultiCovector& a, const Polynomial& f);
  static PolyForm from_covector(const MultiCovector& a);
  static PolyForm scalar(int n, const Polynomial& f);

  int rank() const { return n_; }
  int degree() const { return degree_; }
  const std::map<Mask, Polynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Polynomial coefficient(Mask m) const;

  void add(Mask m, const Polynomial& f);

  bool is_horizontal() const;
  bool is_vertical() const;

  PolyForm& operator+=(const PolyForm& other);
  PolyForm& operator-=(const PolyForm& other);
  PolyForm& operator*=(const Rational& s);

  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator-(PolyForm a) { return a *= Rational(-1); }
  friend PolyForm operator*(const Rational& s, PolyForm a) { return a *= s; }
  friend PolyForm operator*(const Polynomial& f, const PolyForm& a);
  friend bool operator==(const PolyForm& a, const PolyForm& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Largest total degree of a coefficient; -1 for zero.
  int coefficient_degree() const;

private:
  void check_compatible(const PolyForm& other) const;

  int n_ = 0;
  int degree_ = 0;
  std::map<Mask, Polynomial> terms_;
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);

PolyForm exterior_d(const PolyForm& a);

/// Part of d raising monomial weight by j (0, 1 or 2).
PolyForm d_weight_part(const PolyForm& a, int j);

MultiCovector evaluate_at(const PolyForm& a, const GroupPoint& p);

/// Multiplies every coefficient by prod_i ((c_i - lo_i)(hi_i - c_i))^2.
PolyForm bump_multiply(const PolyForm& a, const Box& box);
Polynomial bump_polynomial(int n, const Box& box);

/// s_lambda^* on forms: coefficients composed with the dilation and each
/// monomial scaled by lambda^weight.
PolyForm dilation_pullback(const Rational& lambda, const PolyForm& a);

/// Applies a constant operator on the full algebra coefficient-wise.
PolyForm apply_pointwise(const GradedOperator& op, const PolyForm& a);

/// Integral over the box of the coefficient of dx^dy^theta (= dx^dy^dt).
Rational integrate_top(const PolyForm& a, const Box& box);

/// Both parts of the weight split, coefficient-wise.
std::pair<PolyForm, PolyForm> weight_split(const PolyForm& a);

std::string to_string(const PolyForm& a);

} // namespace heis
