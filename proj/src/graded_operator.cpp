#include "heisenberg/graded_operator.hpp"

#include <stdexcept>

namespace heis {

GradedOperator GradedOperator::from_action(int n, Space space, int min_degree, int max_degree,
                                           const std::function<MultiCovector(const MultiCovector&)>& action) {
  GradedOperator op(n, space);
  for (int k = min_degree; k <= max_degree; ++k) {
    const auto source = monomial::basis(n, k, space);
    if (source.empty()) continue;
    std::optional<int> target;
    std::vector<MultiCovector> images;
    images.reserve(source.size());
    for (Mask m : source) {
      images.push_back(action(MultiCovector::monomial(n, m)));
      if (!target) target = images.back().degree();
      else if (*target != images.back().degree())
        throw std::logic_error("graded action changes target degree within one block");
    }
    const auto target_basis = monomial::basis(n, *target, space);
    RationalMatrix mat(target_basis.size(), source.size());
    for (std::size_t j = 0; j < source.size(); ++j) {
      if (images[j].is_zero()) continue;
      const auto col = images[j].to_vector(space);
      for (std::size_t i = 0; i < col.size(); ++i) mat(i, j) = col[i];
    }
    op.set_block(k, *target, std::move(mat));
  }
  return op;
}

void GradedOperator::set_block(int source_degree, int target_degree, RationalMatrix m) {
  const auto rows = monomial::basis(n_, target_degree, space_).size();
  const auto cols = monomial::basis(n_, source_degree, space_).size();
  if (m.rows() != rows || m.cols() != cols) throw std::invalid_argument("block has wrong shape");
  blocks_[source_degree] = Block{target_degree, std::move(m)};
}

const GradedOperator::Block* GradedOperator::block(int source_degree) const {
  auto it = blocks_.find(source_degree);
  return it == blocks_.end() ? nullptr : &it->second;
}

MultiCovector GradedOperator::apply(const MultiCovector& a) const {
  if (a.rank() != n_) throw std::invalid_argument("operator applied to covector of different rank");
  const Block* b = block(a.degree());
  if (b == nullptr) throw std::invalid_argument("operator has no block for degree " + std::to_string(a.degree()));
  if (a.is_zero()) return MultiCovector(n_, b->target_degree);
  return MultiCovector::from_vector(n_, b->target_degree, b->matrix.apply(a.to_vector(space_)), space_);
}

GradedOperator GradedOperator::adjoint() const {
  GradedOperator out(n_, space_);
  for (const auto& [k, b] : blocks_) {
    if (out.blocks_.count(b.target_degree) != 0)
      throw std::logic_error("adjoint needs an injective degree map");
    out.blocks_[b.target_degree] = Block{k, b.matrix.transpose()};
  }
  return out;
}

bool operator==(const GradedOperator& a, const GradedOperator& b) {
  if (a.n_ != b.n_ || a.space_ != b.space_ || a.blocks_.size() != b.blocks_.size()) return false;
  for (const auto& [k, blk] : a.blocks_) {
    const auto* other = b.block(k);
    if (other == nullptr || other->target_degree != blk.target_degree || !(other->matrix == blk.matrix))
      return false;
  }
  return true;
}

GradedOperator compose(const GradedOperator& a, const GradedOperator& b) {
  if (a.rank() != b.rank() || a.space() != b.space())
    throw std::invalid_argument("composing operators on different spaces");
  GradedOperator out(a.rank(), a.space());
  for (const auto& [k, bb] : b.blocks()) {
    const auto* ab = a.block(bb.target_degree);
    if (ab == nullptr) continue;
    out.set_block(k, ab->target_degree, ab->matrix * bb.matrix);
  }
  return out;
}

GradedOperator identity_operator(int n, Space space) {
  GradedOperator op(n, space);
  const int top = space == Space::full ? 2 * n + 1 : 2 * n;
  for (int k = 0; k <= top; ++k)
    op.set_block(k, k, RationalMatrix::identity(monomial::basis(n, k, space).size()));
  return op;
}

GradedOperator lefschetz_operator(int n, int power) {
  if (power < 0) throw std::invalid_argument("negative Lefschetz power");
  GradedOperator op(n, Space::horizontal);
  for (int k = 0; k + 2 * power <= 2 * n; ++k) {
    const auto src = monomial::basis(n, k, Space::horizontal);
    const auto dst = monomial::basis(n, k + 2 * power, Space::horizontal);
    RationalMatrix m(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      MultiCovector v = MultiCovector::monomial(n, src[j]);
      for (int p = 0; p < power; ++p) v = lefschetz(v, Lefschetz::raise);
      const auto col = v.to_vector(Space::horizontal);
      for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
    }
    op.set_block(k, k + 2 * power, std::move(m));
  }
  return op;
}

GradedOperator lambda_operator(int n) {
  return GradedOperator::from_action(n, Space::horizontal, 2, 2 * n,
                                     [](const MultiCovector& a) { return lefschetz(a, Lefschetz::lower); });
}

GradedOperator hodge_operator(int n) {
  return GradedOperator::from_action(n, Space::horizontal, 0, 2 * n,
                                     [](const MultiCovector& a) { return hodge_star_h(a); });
}

GradedOperator dilation_operator(int n, const Rational& lambda) {
  return GradedOperator::from_action(n, Space::full, 0, 2 * n + 1,
                                     [&](const MultiCovector& a) { return dilation_pullback(lambda, a); });
}

} // namespace heis
