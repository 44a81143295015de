#pragma once

#include "heisenberg/chain.hpp"
#include "heisenberg/currents.hpp"

#include <string>
#include <vector>

namespace heis {

struct DegreeRow {
  int degree = 0;
  int dim_lambda = 0;
  int dim_e0 = 0;
  int min_weight = 0;
  int max_weight = 0;
  /// Weight of E0 in this degree: h for h <= n, h + 1 above.
  int e0_weight = 0;
};

/// Per-degree dimensions and weights for 1 <= n <= 4.
std::vector<DegreeRow> degree_table(int n);
std::string tables_text(int n);
std::string tables_csv(int n);

struct MassFlags {
  bool oblique = false;
  bool rumin = false;
  bool csv = false;
};

std::string mass_output(const Chain& T, const MassFlags& flags, QuadratureSpec rule = {});

struct SweepRow {
  Rational lambda;
  double mass = 0;
  double oblique_mass = 0;
  /// lambda^{k+1} oblique(T) + lambda^k mass(T), masses of T itself.
  double bound = 0;
  /// mass(s_lambda# T) / lambda^{k+1}.
  double ratio = 0;
};

std::vector<SweepRow> sweep(const Chain& T, const std::vector<Rational>& lambdas, QuadratureSpec rule = {});
/// Header lambda,mass,oblique_mass,bound,ratio_mass_over_lambda_k1.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Parses a comma separated list of positive rationals.
std::vector<Rational> parse_lambdas(const std::string& text);

} // namespace heis
