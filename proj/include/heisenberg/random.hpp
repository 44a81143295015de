#pragma once

#include "heisenberg/poly_form.hpp"
#include "heisenberg/rumin.hpp"

#include <random>

namespace heis {

/// Deterministic source of random exact test data.
class Battery {
public:
  explicit Battery(unsigned long seed) : rng_(seed) {}

  long integer(long lo, long hi);
  /// Small rational p/q with |p| <= 4, 1 <= q <= 3.
  Rational rational();
  /// Positive p/q with p <= 5, q <= 3, used as a dilation factor.
  Rational scale();
  /// Random polynomial in nvars variables of total degree <= max_degree.
  Polynomial polynomial(int nvars, int max_degree, int terms = 3);
  MultiCovector covector(int n, int degree);
  /// Random form of the given degree on H^n, coefficients of degree <= max_degree.
  PolyForm form(int n, int degree, int max_degree);
  /// Pi_E0 of a random form: a section of E0.
  PolyForm e0_section(const RuminOperators& ops, int degree, int max_degree);

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

} // namespace heis

#include "heisenberg/chain.hpp"

namespace heis {

/// Random chain of `pieces` polynomial pieces (cubes and simplices mixed) with
/// map components of degree <= max_degree in the parameters.
Chain random_polynomial_chain(Battery& b, int n, int dim, int pieces = 2, int max_degree = 2);

/// Polynomial Legendrian curve u -> (x(u), y(u), t(u)), t' = (x.y' - y.x')/2.
Chain legendrian_curve(Battery& b, int n);
/// Legendrian surface (u, v) -> (x, grad g, x.grad g / 2 - g), x = (u, v),
/// remaining coordinates constant. Requires n >= 2.
Chain legendrian_surface(Battery& b, int n);

} // namespace heis
