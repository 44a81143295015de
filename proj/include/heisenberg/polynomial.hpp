#pragma once

#include "heisenberg/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace heis {

inline constexpr int kMaxVariables = 9;

using Exponents = std::array<std::uint8_t, kMaxVariables>;

/// Sparse multivariate polynomial with exact rational coefficients. Variables
/// are indexed 0..nvars-1; zero coefficients are never stored.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(int nvars);

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int index);
  static Polynomial monomial(int nvars, const Exponents& e, const Rational& c = 1);

  int nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;

  void add_term(const Exponents& e, const Rational& c);

  int total_degree() const;
  /// max over terms of sum w_i e_i; -1 for the zero polynomial.
  int weighted_degree(const std::vector<int>& weights) const;
  /// min over terms of sum w_i e_i; -1 for the zero polynomial.
  int min_weighted_degree(const std::vector<int>& weights) const;

  Polynomial derivative(int var) const;

  Rational evaluate(const std::vector<Rational>& point) const;
  double evaluate(const std::vector<double>& point) const;

  /// Substitutes subs[i] (all sharing one variable count) for variable i.
  Polynomial compose(const std::vector<Polynomial>& subs) const;

  /// Integral over the box prod [lo_i, hi_i].
  Rational integrate_box(const std::vector<Rational>& lo, const std::vector<Rational>& hi) const;
  /// Integral over [0,1]^nvars.
  Rational integrate_cube() const;
  /// Integral over the standard simplex {u_i >= 0, sum u_i <= 1}.
  Rational integrate_simplex() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

private:
  void check_compatible(const Polynomial& other) const;

  int nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

Polynomial pow(const Polynomial& p, unsigned e);

/// Variable names used by to_string; defaults to v1, v2, ...
std::string to_string(const Polynomial& p, const std::vector<std::string>& names = {});

} // namespace heis
