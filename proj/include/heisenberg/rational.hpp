#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace heis {

/// Arbitrary precision rational scalar used by every algebraic operator.
using Rational = mpq_class;

/// Parses "3", "-7/2" or a finite decimal such as "0.125" into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// q^e for a non-negative integer exponent.
Rational pow(const Rational& q, unsigned e);

/// p/q in canonical form (mpq_class(p, q) alone does not reduce).
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace heis
