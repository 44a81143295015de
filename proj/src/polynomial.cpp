#include "heisenberg/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace heis {

namespace {

Rational factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

} // namespace

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVariables) throw std::invalid_argument("unsupported number of variables");
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents{}, c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
  Exponents e{};
  e[static_cast<std::size_t>(index)] = 1;
  return monomial(nvars, e);
}

Polynomial Polynomial::monomial(int nvars, const Exponents& e, const Rational& c) {
  Polynomial p(nvars);
  for (int i = nvars; i < kMaxVariables; ++i)
    if (e[static_cast<std::size_t>(i)] != 0) throw std::invalid_argument("exponent on a missing variable");
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int Polynomial::total_degree() const {
  return weighted_degree(std::vector<int>(static_cast<std::size_t>(nvars_), 1));
}

int Polynomial::weighted_degree(const std::vector<int>& weights) const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int i = 0; i < nvars_; ++i) d += weights.at(static_cast<std::size_t>(i)) * e[static_cast<std::size_t>(i)];
    best = std::max(best, d);
  }
  return best;
}

int Polynomial::min_weighted_degree(const std::vector<int>& weights) const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int i = 0; i < nvars_; ++i) d += weights.at(static_cast<std::size_t>(i)) * e[static_cast<std::size_t>(i)];
    best = best < 0 ? d : std::min(best, d);
  }
  return best;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw std::invalid_argument("derivative variable out of range");
  Polynomial out(nvars_);
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponents f = e;
    --f[v];
    out.add_term(f, c * e[v]);
  }
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluation point has wrong dimension");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < nvars_; ++i) {
      const auto k = e[static_cast<std::size_t>(i)];
      if (k != 0) term *= pow(point[static_cast<std::size_t>(i)], k);
    }
    acc += term;
  }
  return acc;
}

double Polynomial::evaluate(const std::vector<double>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluation point has wrong dimension");
  double acc = 0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (int i = 0; i < nvars_; ++i) {
      const auto k = e[static_cast<std::size_t>(i)];
      if (k != 0) term *= std::pow(point[static_cast<std::size_t>(i)], k);
    }
    acc += term;
  }
  return acc;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& subs) const {
  if (static_cast<int>(subs.size()) != nvars_) throw std::invalid_argument("composition needs one polynomial per variable");
  const int target = subs.empty() ? 0 : subs.front().nvars();
  for (const auto& s : subs)
    if (s.nvars() != target) throw std::invalid_argument("substituted polynomials disagree on variables");
  // powers of each substitution, built on demand
  std::vector<std::vector<Polynomial>> powers(subs.size());
  auto power_of = [&](std::size_t i, unsigned k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * subs[i]);
    return cache[k];
  };
  Polynomial out(target);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (e[i] != 0) term = term * power_of(i, e[i]);
    out += term;
  }
  return out;
}

Rational Polynomial::integrate_box(const std::vector<Rational>& lo, const std::vector<Rational>& hi) const {
  if (static_cast<int>(lo.size()) != nvars_ || static_cast<int>(hi.size()) != nvars_)
    throw std::invalid_argument("box has wrong dimension");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      const unsigned k = e[i] + 1u;
      term *= (pow(hi[i], k) - pow(lo[i], k)) / Rational(k);
    }
    acc += term;
  }
  return acc;
}

Rational Polynomial::integrate_cube() const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < nvars_; ++i) term /= Rational(e[static_cast<std::size_t>(i)] + 1);
    acc += term;
  }
  return acc;
}

Rational Polynomial::integrate_simplex() const {
  // int_simplex u^a = prod a_i! / (k + |a|)!
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    unsigned total = 0;
    for (int i = 0; i < nvars_; ++i) {
      term *= factorial(e[static_cast<std::size_t>(i)]);
      total += e[static_cast<std::size_t>(i)];
    }
    acc += term / factorial(total + static_cast<unsigned>(nvars_));
  }
  return acc;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("polynomials in different numbers of variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e{};
      for (std::size_t i = 0; i < e.size(); ++i) {
        const int s = ea[i] + eb[i];
        if (s > 255) throw std::overflow_error("polynomial exponent overflow");
        e[i] = static_cast<std::uint8_t>(s);
      }
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial result = Polynomial::constant(p.nvars(), 1);
  Polynomial base = p;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string s;
  // highest total degree first reads more naturally
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const Rational mag = abs(c);
    if (s.empty())
      s += sgn(c) < 0 ? "-" : "";
    else
      s += sgn(c) < 0 ? " - " : " + ";
    std::string mono;
    for (int i = 0; i < p.nvars(); ++i) {
      const auto k = e[static_cast<std::size_t>(i)];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(i)] : "v" + std::to_string(i + 1);
      if (k > 1) mono += "**" + std::to_string(k);
    }
    if (mono.empty())
      s += mag.get_str();
    else if (mag == 1)
      s += mono;
    else
      s += mag.get_str() + "*" + mono;
  }
  return s;
}

} // namespace heis
