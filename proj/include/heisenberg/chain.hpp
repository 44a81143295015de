#pragma once

#include "heisenberg/expression.hpp"
#include "heisenberg/quadrature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace heis {

/// C^1 map from the reference cube [0,1]^k or the standard k-simplex into
/// H^n, given by 2n+1 expressions in u1..uk (coordinates x, y, t).
class ParamSimplex {
public:
  ParamSimplex() = default;
  /// Validates smoothness of the map on the closed domain; throws ParseError.
  ParamSimplex(int dim, Domain domain, std::vector<Expr> map, int multiplicity = 1, int quadrature_order = 8);
  static ParamSimplex parse(int dim, Domain domain, const std::vector<std::string>& map, int multiplicity = 1,
                            int quadrature_order = 8);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(map_.size()) / 2; }
  Domain domain() const { return domain_; }
  const std::vector<Expr>& map() const { return map_; }
  int multiplicity() const { return multiplicity_; }
  int quadrature_order() const { return quadrature_order_; }

  /// Components as exact polynomials in u, when the map is polynomial.
  const std::optional<std::vector<Polynomial>>& polynomial_map() const { return poly_; }
  bool is_polynomial() const { return poly_.has_value(); }

  /// Coordinates F(u).
  std::vector<double> point(const std::vector<double>& u) const;
  /// Frame components of dF(u): rows X_1..X_n, Y_1..Y_n, Z; one column per u_j.
  std::vector<std::vector<double>> frame_jacobian(const std::vector<double>& u) const;
  /// Exact frame Jacobian as polynomials in u (polynomial maps only).
  std::vector<std::vector<Polynomial>> frame_jacobian_exact() const;

  ParamSimplex with_map(std::vector<Expr> map) const;

private:
  int dim_ = 0;
  Domain domain_ = Domain::cube;
  std::vector<Expr> map_;
  std::vector<std::vector<Expr>> jacobian_; // coordinate partials [component][param]
  std::optional<std::vector<Polynomial>> poly_;
  int multiplicity_ = 1;
  int quadrature_order_ = 8;
};

/// Integer combination of parametrized pieces of one dimension.
class Chain {
public:
  struct Piece {
    long coefficient = 1;
    ParamSimplex simplex;
  };

  Chain() = default;
  Chain(int n, int dim) : n_(n), dim_(dim) {}

  int rank() const { return n_; }
  int dim() const { return dim_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  bool is_polynomial() const;

  void add(long coefficient, ParamSimplex simplex);

  /// User assertion that the pieces are embedded with disjoint interiors.
  bool embedded_disjoint = true;

private:
  int n_ = 1;
  int dim_ = 0;
  std::vector<Piece> pieces_;
};

/// Faces with induced orientations: cube faces (i, e) carry (-1)^{i+e}
/// (i 1-based), simplex faces opposite vertex i carry (-1)^i.
Chain boundary(const Chain& T);

/// Composes every map with the dilation (lambda x, lambda y, lambda^2 t).
Chain pushforward_dilation(const Rational& lambda, const Chain& T);

/// Reads the JSON chain configuration; errors carry line and column.
Chain chain_from_json(const std::string& text);
Chain load_chain(const std::string& path);

/// Unit-length segment, unit square and similar battery pieces.
namespace chains {
Chain horizontal_segment(int n = 1);
Chain vertical_segment(int n = 1);
Chain vertical_square();
/// The graph t = 0 over the unit square in the (x, y) plane of H^1.
Chain graph_square();
/// (u, v, w) -> (x1, x2, y1, y2, t) = (u, v, 0, 0, w) in H^2.
Chain colegendrian_plane();
/// (u, v, w) -> (u, 0, v, 0, w) in H^2.
Chain symplectic_plane();
} // namespace chains

} // namespace heis
