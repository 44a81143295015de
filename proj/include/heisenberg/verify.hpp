#pragma once

#include "heisenberg/rumin.hpp"

#include <optional>
#include <string>
#include <vector>

namespace heis {

struct ConformanceRow {
  std::string name;
  /// The identity being checked, stated in symbols.
  std::string anchor;
  int instances = 0;
  bool passed = true;
  std::optional<std::string> counterexample;
};

struct ConformanceReport {
  std::vector<ConformanceRow> rows;

  int passed() const;
  int failed() const;
  int total() const { return static_cast<int>(rows.size()); }
  bool all_passed() const { return failed() == 0; }

  std::string to_text() const;
  std::string to_json() const;
};

struct VerifyOptions {
  int n = 1;
  /// Largest total degree of random polynomial coefficients.
  int degree_bound = 3;
  unsigned long seed = 7;
  int instances = 200;
  /// Include the rows on currents (pairings, correspondences, masses).
  bool currents = true;
  /// Operators under test; corrupt_dtheta_sign gives the negative control.
  BuildOptions build;
};

ConformanceReport run_verify(const VerifyOptions& options);

/// Rows for the four identities relating Hodge star, L, Lambda and d0^{-1},
/// each an exact matrix identity over full monomial bases.
std::vector<ConformanceRow> hodge_rows(int n);

} // namespace heis
