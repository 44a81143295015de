#include "heisenberg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace heis {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    mpz_class d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Rational(mpz_class(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto ip = s.substr(0, dot);
    auto fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    mpz_class scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    mpz_class whole = ip.empty() ? mpz_class(0) : mpz_class(std::string(ip));
    mpz_class frac = fp.empty() ? mpz_class(0) : mpz_class(std::string(fp));
    value = Rational(whole * scale + frac, scale);
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    value = Rational(mpz_class(std::string(s)));
  }
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational pow(const Rational& q, unsigned e) {
  Rational result = 1;
  Rational base = q;
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

} // namespace heis
