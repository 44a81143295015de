#pragma once

#include <vector>

namespace heis {

/// Gauss-Legendre nodes and weights on [0, 1].
struct GaussRule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule1D gauss_legendre(int order);

enum class Domain { cube, simplex };

/// Tensor rule on [0,1]^dim, or its collapsed (Duffy) image on the standard
/// simplex. Dimension 0 is the single point with weight 1.
struct QuadratureRule {
  std::vector<std::vector<double>> points;
  std::vector<double> weights;
};

QuadratureRule make_rule(Domain domain, int dim, int order);

} // namespace heis
