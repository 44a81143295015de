#pragma once

#include "heisenberg/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace heis {

inline constexpr int kMaxRank = 4;

/// A basis monomial omega_{i1} ^ ... ^ omega_{ik} (i1 < ... < ik) encoded as a
/// bit set over 0-based coframe indices: bits 0..n-1 are dx_1..dx_n, bits
/// n..2n-1 are dy_1..dy_n, bit 2n is theta.
using Mask = std::uint32_t;

/// Which part of the exterior algebra an operator acts on: the whole algebra
/// of the coframe, or the horizontal subalgebra generated by dx, dy only.
enum class Space { full, horizontal };

namespace monomial {

inline int coframe_size(int n) { return 2 * n + 1; }
inline Mask theta_bit(int n) { return Mask{1} << (2 * n); }
inline int degree(Mask m) { return __builtin_popcount(m); }
inline bool is_horizontal(int n, Mask m) { return (m & theta_bit(n)) == 0; }
/// Dilation weight: degree, plus one when theta is present.
inline int weight(int n, Mask m) { return degree(m) + (is_horizontal(n, m) ? 0 : 1); }

/// Sign of e_a ^ e_b relative to e_{a|b}; zero when a and b overlap.
int wedge_sign(Mask a, Mask b);

/// Monomials of degree k, lexicographic in their sorted index lists.
std::vector<Mask> basis(int n, int k, Space space = Space::full);

/// Position of m in basis(n, degree(m), space); -1 if not in that space.
int position(int n, Mask m, Space space = Space::full);

std::string name(int n, Mask m);

} // namespace monomial

/// Exact homogeneous element of the exterior algebra on the left-invariant
/// coframe dx_1..dx_n, dy_1..dy_n, theta of H^n. Zero coefficients are never
/// stored.
class MultiCovector {
public:
  MultiCovector() = default;
  MultiCovector(int n, int degree);

  static MultiCovector monomial(int n, Mask m, const Rational& coefficient = 1);
  static MultiCovector one(int n) { return monomial(n, 0); }

  int rank() const { return n_; }
  int degree() const { return degree_; }
  const std::map<Mask, Rational>& terms() const { return terms_; }

  Rational coefficient(Mask m) const;
  void add(Mask m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  /// No theta factor in any monomial.
  bool is_horizontal() const;
  /// Every monomial contains theta.
  bool is_vertical() const;

  std::vector<Rational> to_vector(Space space = Space::full) const;
  static MultiCovector from_vector(int n, int degree, const std::vector<Rational>& v,
                                   Space space = Space::full);

  MultiCovector& operator+=(const MultiCovector& other);
  MultiCovector& operator-=(const MultiCovector& other);
  MultiCovector& operator*=(const Rational& s);

  friend MultiCovector operator+(MultiCovector a, const MultiCovector& b) { return a += b; }
  friend MultiCovector operator-(MultiCovector a, const MultiCovector& b) { return a -= b; }
  friend MultiCovector operator-(MultiCovector a) { return a *= Rational(-1); }
  friend MultiCovector operator*(const Rational& s, MultiCovector a) { return a *= s; }
  friend bool operator==(const MultiCovector& a, const MultiCovector& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

private:
  void check_compatible(const MultiCovector& other) const;

  int n_ = 0;
  int degree_ = 0;
  std::map<Mask, Rational> terms_;
};

/// dx_j, dy_j for 1 <= j <= n.
MultiCovector dx(int n, int j);
MultiCovector dy(int n, int j);
MultiCovector theta(int n);
/// d(theta) = -sum_j dx_j ^ dy_j, from theta = dt - 1/2 sum (x dy - y dx).
MultiCovector dtheta(int n);

/// Exterior product; returns the zero form of degree deg a + deg b when that
/// exceeds 2n+1. Throws on rank mismatch.
MultiCovector wedge(const MultiCovector& a, const MultiCovector& b);

/// Inner product making the coframe monomials orthonormal.
Rational inner_product(const MultiCovector& a, const MultiCovector& b);

/// a = horizontal + vertical with vertical = theta-divisible part.
std::pair<MultiCovector, MultiCovector> weight_split(const MultiCovector& a);

/// s_lambda^* a: each monomial scaled by lambda^weight.
MultiCovector dilation_pullback(const Rational& lambda, const MultiCovector& a);

enum class Lefschetz { raise, lower };

/// raise: L a = dtheta ^ a; lower: its metric adjoint. Horizontal input only.
MultiCovector lefschetz(const MultiCovector& a, Lefschetz direction);

/// Hodge star of the horizontal algebra, orientation dx_1^..^dx_n^dy_1^..^dy_n:
/// <a,b> vol_h = a ^ *b.
MultiCovector hodge_star_h(const MultiCovector& a);

/// Volume monomial of the horizontal algebra, or of the whole coframe.
Mask horizontal_volume(int n);
Mask full_volume(int n);

std::string to_string(const MultiCovector& a);

} // namespace heis
