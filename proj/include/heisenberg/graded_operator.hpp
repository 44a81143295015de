#pragma once

#include "heisenberg/exterior.hpp"
#include "heisenberg/matrix.hpp"

#include <functional>
#include <map>
#include <optional>
#include <utility>

namespace heis {

/// A degree-indexed family of exact matrices acting on MultiCovectors, one
/// block per source degree, expressed in the monomial basis of `space()`.
class GradedOperator {
public:
  struct Block {
    int target_degree = 0;
    RationalMatrix matrix;
  };

  GradedOperator() = default;
  GradedOperator(int n, Space space) : n_(n), space_(space) {}

  /// Builds every block from the action on basis monomials.
  static GradedOperator from_action(int n, Space space, int min_degree, int max_degree,
                                    const std::function<MultiCovector(const MultiCovector&)>& action);

  int rank() const { return n_; }
  Space space() const { return space_; }
  const std::map<int, Block>& blocks() const { return blocks_; }

  void set_block(int source_degree, int target_degree, RationalMatrix m);
  /// Block for a source degree, if any.
  const Block* block(int source_degree) const;

  /// Throws when there is no block for the input degree.
  MultiCovector apply(const MultiCovector& a) const;

  GradedOperator adjoint() const;

  friend bool operator==(const GradedOperator& a, const GradedOperator& b);

private:
  int n_ = 0;
  Space space_ = Space::full;
  std::map<int, Block> blocks_;
};

/// a o b: apply b first.
GradedOperator compose(const GradedOperator& a, const GradedOperator& b);

GradedOperator identity_operator(int n, Space space);

/// L^power = wedge with dtheta^power on the horizontal algebra.
GradedOperator lefschetz_operator(int n, int power = 1);
/// Lambda, the adjoint of L.
GradedOperator lambda_operator(int n);
/// Horizontal Hodge star.
GradedOperator hodge_operator(int n);
/// s_lambda^* on the full algebra.
GradedOperator dilation_operator(int n, const Rational& lambda);

} // namespace heis
