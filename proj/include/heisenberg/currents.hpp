#pragma once

#include "heisenberg/chain.hpp"
#include "heisenberg/poly_form.hpp"
#include "heisenberg/rumin.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace heis {

struct QuadratureSpec {
  /// Use exact rational integration when the map and the form are polynomial.
  bool prefer_exact = true;
  /// Overrides each piece's own quadrature order when set.
  std::optional<int> order;
};

struct PairingResult {
  double value = 0;
  double error_estimate = 0;
  std::optional<Rational> exact;
};

/// sum_i a_i m_i int_domain f_i^* omega.
PairingResult pair(const Chain& T, const PolyForm& omega, QuadratureSpec rule = {});
/// Exact pairing; throws std::invalid_argument for non-polynomial maps.
Rational pair_exact(const Chain& T, const PolyForm& omega);

struct MassReport {
  double riemannian_mass = 0;
  double oblique_mass = 0;
  double rumin_mass = 0;
  double quadrature_error_estimate = 0;
  /// Set when the chain is not declared embedded with disjoint interiors.
  bool upper_bound_only = false;
};

MassReport mass_report(const Chain& T, QuadratureSpec rule = {});
double mass(const Chain& T, QuadratureSpec rule = {});
double oblique_mass(const Chain& T, QuadratureSpec rule = {});
double rumin_mass(const Chain& T, QuadratureSpec rule = {});

/// Second route to the oblique mass through pairings <T, theta ^ phi> with unit
/// horizontal (k-1)-covector fields phi: constant random fields, plus the
/// pointwise aligned field whose pairing is int |theta-part of the tangent|.
struct ObliquePairingEstimate {
  double aligned = 0;
  double best_random = 0;
  double best = 0;
};

ObliquePairingEstimate oblique_mass_by_pairing(const Chain& T, int random_fields = 50, unsigned long seed = 1,
                                               QuadratureSpec rule = {});

/// Pointwise matrix of coefficients tau_I = det(J_I) of the tangent k-vector of
/// each piece in the coframe basis, evaluated at u.
std::vector<double> tangent_covector(const ParamSimplex& s, const std::vector<double>& u);

// ------------------------------------------------------------- classification

enum class Status { holds, fails, vacuous, not_applicable };
std::string to_string(Status s);

struct PredicateResult {
  Status status = Status::not_applicable;
  /// Supremum of the pointwise residual (exact path: largest coefficient).
  double pointwise_residual = 0;
  /// Largest |pairing| over the test battery.
  double pairing_residual = 0;
  bool exact = false;
};

struct Classification {
  PredicateResult horizontal;
  PredicateResult vertical;
  PredicateResult co_legendrian;
  PredicateResult oblique;
  double tolerance = 0;
};

/// tolerance <= 0 selects max(1e-9, 100 eps scale). Polynomial chains use the
/// exact path with zero tolerance.
Classification classify(const Chain& T, double tolerance = 0, unsigned long seed = 1);

/// theta ^ dtheta^p, the restricting covector of the co-Legendrian conditions.
MultiCovector theta_dtheta_power(int n, int p);

// ------------------------------------------------------------ smooth currents

/// Current given by integration against a polynomial form over a box:
/// federer_fleming is omega -> int alpha ^ omega; rumin is the same pairing
/// on E0-valued test forms.
struct SmoothCurrent {
  enum class Kind { federer_fleming, rumin };
  Kind kind = Kind::federer_fleming;
  PolyForm form;
  Box box;

  int rank() const { return form.rank(); }
  int dimension() const { return 2 * form.rank() + 1 - form.degree(); }
};

SmoothCurrent ff_current(const PolyForm& alpha, const Box& box);
SmoothCurrent ru_current(const PolyForm& beta, const Box& box);

Rational ff_pair(const SmoothCurrent& S, const PolyForm& omega);

/// Boundary through the representing form: (-1)^k FF(d alpha), resp.
/// (-1)^k Ru(d_c beta).
SmoothCurrent boundary(const SmoothCurrent& S);
/// (-1)^h FF(d0^{-1} alpha).
SmoothCurrent b_operator(const SmoothCurrent& S);
/// FF(Pi_E alpha).
SmoothCurrent oblique_correction(const SmoothCurrent& S);

Classification classify(const SmoothCurrent& S);

// ----------------------------------------------------------------- functionals

/// Exact linear functional on polynomial test forms of one degree.
class Functional {
public:
  using Eval = std::function<Rational(const PolyForm&)>;

  Functional(int n, int dim, Eval eval, std::string description);

  static Functional of(const Chain& T);
  static Functional of(const SmoothCurrent& S);

  int rank() const { return n_; }
  int dim() const { return dim_; }
  const std::string& description() const { return description_; }

  Rational operator()(const PolyForm& omega) const;

private:
  int n_;
  int dim_;
  Eval eval_;
  std::string description_;
};

Functional operator+(const Functional& a, const Functional& b);
Functional operator-(const Functional& a, const Functional& b);
Functional operator*(const Rational& s, const Functional& a);

/// omega -> T(d omega).
Functional boundary(const Functional& T);
/// omega -> T(d0^{-1} omega).
Functional b_operator(const Functional& T);
/// Rumin boundary: gamma -> T(d_c gamma).
Functional rumin_boundary(const Functional& T);

class UnsupportedCorrespondence : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Low dimensions (k <= n): omega -> T_R(Pi_E0 omega).
Functional tilde(const Functional& rumin_side);
/// Low dimensions (k <= n): gamma -> T_FF(Pi_E gamma).
Functional hat(const Functional& ff_side);
Functional tilde(const Chain& rumin_side);
Functional hat(const Chain& ff_side);

/// High dimensions (k > n), on representing forms: Ru(beta) -> FF(Pi_E beta)
/// and FF(alpha) -> Ru(Pi_E0 alpha).
SmoothCurrent tilde(const SmoothCurrent& rumin_side);
SmoothCurrent hat(const SmoothCurrent& ff_side);

} // namespace heis
