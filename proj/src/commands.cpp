#include "heisenberg/commands.hpp"

#include "heisenberg/rumin.hpp"

#include <cmath>
#include <fmt/format.h>
#include <sstream>
#include <stdexcept>

namespace heis {

std::vector<DegreeRow> degree_table(int n) {
  if (n < 1 || n > kMaxRank) throw std::invalid_argument(fmt::format("n must be in 1..{}", kMaxRank));
  const auto& ops = RuminOperators::cached(n);
  std::vector<DegreeRow> rows;
  for (int h = 0; h <= 2 * n + 1; ++h) {
    DegreeRow r;
    r.degree = h;
    const auto basis = monomial::basis(n, h);
    r.dim_lambda = static_cast<int>(basis.size());
    r.dim_e0 = static_cast<int>(ops.pi_E0().block(h)->matrix.rank());
    r.min_weight = 2 * n + 2;
    for (Mask m : basis) {
      r.min_weight = std::min(r.min_weight, monomial::weight(n, m));
      r.max_weight = std::max(r.max_weight, monomial::weight(n, m));
    }
    const RuminBasis e0 = e0_basis(n, h);
    r.e0_weight = monomial::weight(n, e0.elements.front().terms().begin()->first);
    rows.push_back(r);
  }
  return rows;
}

std::string tables_text(int n) {
  std::string out = fmt::format("H^{}: homogeneous dimension {}\n", n, 2 * n + 2);
  out += fmt::format("{:>6}  {:>10}  {:>6}  {:>13}  {:>9}\n", "degree", "dim Lambda", "dim E0", "weights", "E0 weight");
  for (const auto& r : degree_table(n))
    out += fmt::format("{:>6}  {:>10}  {:>6}  {:>13}  {:>9}\n", r.degree, r.dim_lambda, r.dim_e0,
                       fmt::format("{}..{}", r.min_weight, r.max_weight), r.e0_weight);
  return out;
}

std::string tables_csv(int n) {
  std::string out = "degree,dim_lambda,dim_e0,min_weight,max_weight,e0_weight\n";
  for (const auto& r : degree_table(n))
    out += fmt::format("{},{},{},{},{},{}\n", r.degree, r.dim_lambda, r.dim_e0, r.min_weight, r.max_weight, r.e0_weight);
  return out;
}

std::string mass_output(const Chain& T, const MassFlags& flags, QuadratureSpec rule) {
  const MassReport m = mass_report(T, rule);
  std::vector<std::pair<std::string, double>> cols{{"mass", m.riemannian_mass}};
  if (flags.oblique) cols.emplace_back("oblique_mass", m.oblique_mass);
  if (flags.rumin) cols.emplace_back("rumin_mass", m.rumin_mass);
  cols.emplace_back("quadrature_error_estimate", m.quadrature_error_estimate);
  std::string out;
  if (flags.csv) {
    for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i].first;
    out += ",upper_bound_only\n";
    for (std::size_t i = 0; i < cols.size(); ++i) out += fmt::format("{}{:.17g}", i ? "," : "", cols[i].second);
    out += fmt::format(",{}\n", m.upper_bound_only);
    return out;
  }
  for (const auto& [name, value] : cols) out += fmt::format("{} {:.17g}\n", name, value);
  if (m.upper_bound_only) out += "note: chain not declared embedded with disjoint interiors; masses are upper bounds\n";
  return out;
}

std::vector<SweepRow> sweep(const Chain& T, const std::vector<Rational>& lambdas, QuadratureSpec rule) {
  const MassReport base = mass_report(T, rule);
  const int k = T.dim();
  std::vector<SweepRow> rows;
  for (const auto& lambda : lambdas) {
    if (sgn(lambda) <= 0) throw std::invalid_argument("dilation factors must be positive");
    const MassReport m = mass_report(pushforward_dilation(lambda, T), rule);
    const double l = to_double(lambda);
    SweepRow r;
    r.lambda = lambda;
    r.mass = m.riemannian_mass;
    r.oblique_mass = m.oblique_mass;
    r.bound = std::pow(l, k + 1) * base.oblique_mass + std::pow(l, k) * base.riemannian_mass;
    r.ratio = m.riemannian_mass / std::pow(l, k + 1);
    rows.push_back(r);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "lambda,mass,oblique_mass,bound,ratio_mass_over_lambda_k1\n";
  for (const auto& r : rows)
    out += fmt::format("{},{:.17g},{:.17g},{:.17g},{:.17g}\n", to_string(r.lambda), r.mass, r.oblique_mass, r.bound,
                       r.ratio);
  return out;
}

std::vector<Rational> parse_lambdas(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty entry in lambda list");
    const Rational q = parse_rational(item.substr(b, e - b + 1));
    if (sgn(q) <= 0) throw std::invalid_argument("dilation factors must be positive, got " + item);
    out.push_back(q);
  }
  if (out.empty()) throw std::invalid_argument("empty lambda list");
  return out;
}

} // namespace heis
