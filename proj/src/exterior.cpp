#include "heisenberg/exterior.hpp"

#include <stdexcept>

namespace heis {

namespace {

void check_rank(int n) {
  if (n < 1 || n > kMaxRank)
    throw std::invalid_argument("group rank must be between 1 and " + std::to_string(kMaxRank));
}

void combinations(int size, int k, int start, Mask current, std::vector<Mask>& out) {
  if (k == 0) {
    out.push_back(current);
    return;
  }
  for (int i = start; i <= size - k; ++i) combinations(size, k - 1, i + 1, current | (Mask{1} << i), out);
}

} // namespace

namespace monomial {

int wedge_sign(Mask a, Mask b) {
  if ((a & b) != 0) return 0;
  int inversions = 0;
  Mask rest = b;
  while (rest != 0) {
    const int j = __builtin_ctz(rest);
    rest &= rest - 1;
    // elements of a above j must move past e_j
    inversions += __builtin_popcount(a & ~((Mask{2} << j) - 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

std::vector<Mask> basis(int n, int k, Space space) {
  const int size = space == Space::full ? 2 * n + 1 : 2 * n;
  std::vector<Mask> out;
  if (k < 0 || k > size) return out;
  combinations(size, k, 0, 0, out);
  return out;
}

int position(int n, Mask m, Space space) {
  if (space == Space::horizontal && !is_horizontal(n, m)) return -1;
  const auto b = basis(n, degree(m), space);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] == m) return static_cast<int>(i);
  return -1;
}

std::string name(int n, Mask m) {
  if (m == 0) return "1";
  std::string s;
  for (int i = 0; i <= 2 * n; ++i) {
    if ((m & (Mask{1} << i)) == 0) continue;
    if (!s.empty()) s += "^";
    if (i < n)
      s += "dx" + std::to_string(i + 1);
    else if (i < 2 * n)
      s += "dy" + std::to_string(i - n + 1);
    else
      s += "theta";
  }
  return s;
}

} // namespace monomial

MultiCovector::MultiCovector(int n, int degree) : n_(n), degree_(degree) {
  check_rank(n);
  // degrees above 2n+1 are allowed and only ever hold zero
  if (degree < 0) throw std::invalid_argument("covector degree out of range");
}

MultiCovector MultiCovector::monomial(int n, Mask m, const Rational& coefficient) {
  MultiCovector a(n, monomial::degree(m));
  if (m >= (Mask{1} << (2 * n + 1))) throw std::invalid_argument("monomial index out of range");
  a.add(m, coefficient);
  return a;
}

Rational MultiCovector::coefficient(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiCovector::add(Mask m, const Rational& c) {
  if (monomial::degree(m) != degree_) throw std::invalid_argument("monomial degree mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool MultiCovector::is_horizontal() const {
  for (const auto& [m, c] : terms_)
    if (!monomial::is_horizontal(n_, m)) return false;
  return true;
}

bool MultiCovector::is_vertical() const {
  for (const auto& [m, c] : terms_)
    if (monomial::is_horizontal(n_, m)) return false;
  return true;
}

std::vector<Rational> MultiCovector::to_vector(Space space) const {
  const auto b = monomial::basis(n_, degree_, space);
  std::vector<Rational> v(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) v[i] = coefficient(b[i]);
  if (space == Space::horizontal && !is_horizontal())
    throw std::invalid_argument("covector is not horizontal");
  return v;
}

MultiCovector MultiCovector::from_vector(int n, int degree, const std::vector<Rational>& v, Space space) {
  MultiCovector a(n, degree);
  const auto b = monomial::basis(n, degree, space);
  if (b.size() != v.size()) throw std::invalid_argument("coordinate vector has wrong length");
  for (std::size_t i = 0; i < b.size(); ++i) a.add(b[i], v[i]);
  return a;
}

void MultiCovector::check_compatible(const MultiCovector& other) const {
  if (n_ != other.n_) throw std::invalid_argument("covectors of different rank");
  if (degree_ != other.degree_) throw std::invalid_argument("covectors of different degree");
}

MultiCovector& MultiCovector::operator+=(const MultiCovector& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

MultiCovector& MultiCovector::operator-=(const MultiCovector& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

MultiCovector& MultiCovector::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

MultiCovector dx(int n, int j) {
  if (j < 1 || j > n) throw std::invalid_argument("dx index out of range");
  return MultiCovector::monomial(n, Mask{1} << (j - 1));
}

MultiCovector dy(int n, int j) {
  if (j < 1 || j > n) throw std::invalid_argument("dy index out of range");
  return MultiCovector::monomial(n, Mask{1} << (n + j - 1));
}

MultiCovector theta(int n) { return MultiCovector::monomial(n, monomial::theta_bit(n)); }

MultiCovector dtheta(int n) {
  MultiCovector a(n, 2);
  for (int j = 0; j < n; ++j) a.add((Mask{1} << j) | (Mask{1} << (n + j)), -1);
  return a;
}

MultiCovector wedge(const MultiCovector& a, const MultiCovector& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("wedge of covectors of different rank");
  const int n = a.rank();
  const int degree = a.degree() + b.degree();
  MultiCovector out(n, degree);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const int s = monomial::wedge_sign(ma, mb);
      if (s != 0) out.add(ma | mb, s > 0 ? Rational(ca * cb) : Rational(-ca * cb));
    }
  return out;
}

Rational inner_product(const MultiCovector& a, const MultiCovector& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("inner product of different ranks");
  if (a.degree() != b.degree()) return 0;
  Rational acc = 0;
  for (const auto& [m, c] : a.terms()) {
    auto it = b.terms().find(m);
    if (it != b.terms().end()) acc += c * it->second;
  }
  return acc;
}

std::pair<MultiCovector, MultiCovector> weight_split(const MultiCovector& a) {
  MultiCovector h(a.rank(), a.degree());
  MultiCovector v(a.rank(), a.degree());
  for (const auto& [m, c] : a.terms()) (monomial::is_horizontal(a.rank(), m) ? h : v).add(m, c);
  return {h, v};
}

MultiCovector dilation_pullback(const Rational& lambda, const MultiCovector& a) {
  if (sgn(lambda) <= 0) throw std::invalid_argument("dilation factor must be positive");
  MultiCovector out(a.rank(), a.degree());
  for (const auto& [m, c] : a.terms())
    out.add(m, c * pow(lambda, static_cast<unsigned>(monomial::weight(a.rank(), m))));
  return out;
}

MultiCovector lefschetz(const MultiCovector& a, Lefschetz direction) {
  if (!a.is_horizontal()) throw std::invalid_argument("Lefschetz operators act on horizontal covectors");
  const int n = a.rank();
  if (direction == Lefschetz::raise) {
    if (a.degree() + 2 > 2 * n) return MultiCovector(n, a.degree() + 2);
    return wedge(dtheta(n), a);
  }
  // Lambda e_I = sum over j with {j, n+j} in I of <e_I, dtheta ^ e_{I - {j,n+j}}> e_{I - {j,n+j}}.
  if (a.degree() < 2) return MultiCovector(n, 0);
  MultiCovector out(n, a.degree() - 2);
  for (const auto& [m, c] : a.terms())
    for (int j = 0; j < n; ++j) {
      const Mask pair = (Mask{1} << j) | (Mask{1} << (n + j));
      if ((m & pair) != pair) continue;
      const Mask rest = m & ~pair;
      // dtheta contributes -dx_j ^ dy_j
      const int s = -monomial::wedge_sign(pair, rest);
      out.add(rest, s > 0 ? Rational(c) : Rational(-c));
    }
  return out;
}

Mask horizontal_volume(int n) { return (Mask{1} << (2 * n)) - 1; }
Mask full_volume(int n) { return (Mask{1} << (2 * n + 1)) - 1; }

MultiCovector hodge_star_h(const MultiCovector& a) {
  if (!a.is_horizontal()) throw std::invalid_argument("horizontal Hodge star needs a horizontal covector");
  const int n = a.rank();
  const Mask vol = horizontal_volume(n);
  MultiCovector out(n, 2 * n - a.degree());
  for (const auto& [m, c] : a.terms()) {
    const Mask complement = vol & ~m;
    const int s = monomial::wedge_sign(m, complement);
    out.add(complement, s > 0 ? Rational(c) : Rational(-c));
  }
  return out;
}

std::string to_string(const MultiCovector& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : a.terms()) {
    Rational mag = abs(c);
    if (s.empty())
      s += sgn(c) < 0 ? "-" : "";
    else
      s += sgn(c) < 0 ? " - " : " + ";
    if (m == 0) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + " ";
      s += monomial::name(a.rank(), m);
    }
  }
  return s;
}

} // namespace heis
