#include "heisenberg/rumin.hpp"

#include <array>
#include <memory>
#include <mutex>

namespace heis {

namespace {

void check_rank(int n) {
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("group rank must be between 1 and " + std::to_string(kMaxRank));
}

MultiCovector d0_action(int n, const MultiCovector& a, bool flip) {
  // d0(beta + h ^ theta) = (-1)^{deg h} h ^ dtheta
  MultiCovector out(n, a.degree() + 1);
  const MultiCovector dth = flip ? -dtheta(n) : dtheta(n);
  for (const auto& [m, c] : a.terms()) {
    if (monomial::is_horizontal(n, m)) continue;
    const Mask h = m & ~monomial::theta_bit(n);
    MultiCovector term = wedge(MultiCovector::monomial(n, h, c), dth);
    if (monomial::degree(h) % 2 == 1) term *= Rational(-1);
    out += term;
  }
  return out;
}

} // namespace

RuminOperators RuminOperators::build(int n, BuildOptions options) {
  check_rank(n);
  RuminOperators ops;
  ops.n_ = n;
  ops.options_ = options;
  const int top = 2 * n + 1;
  ops.d0_ = GradedOperator::from_action(n, Space::full, 0, top, [&](const MultiCovector& a) {
    return d0_action(n, a, options.corrupt_dtheta_sign);
  });
  ops.d0_pinv_ = GradedOperator(n, Space::full);
  for (int k = 0; k < top; ++k)
    ops.d0_pinv_.set_block(k + 1, k, ops.d0_.block(k)->matrix.pseudo_inverse());
  ops.pi_E0_ = GradedOperator(n, Space::full);
  for (int k = 0; k <= top; ++k) {
    RationalMatrix p = RationalMatrix::identity(monomial::basis(n, k).size());
    const auto* up = ops.d0_.block(k);
    if (k < top) p = p - ops.d0_pinv_.block(k + 1)->matrix * up->matrix;
    if (k > 0) p = p - ops.d0_.block(k - 1)->matrix * ops.d0_pinv_.block(k)->matrix;
    ops.pi_E0_.set_block(k, k, std::move(p));
  }
  return ops;
}

const RuminOperators& RuminOperators::cached(int n) {
  check_rank(n);
  static std::array<std::once_flag, kMaxRank> flags;
  static std::array<std::unique_ptr<const RuminOperators>, kMaxRank> table;
  const auto i = static_cast<std::size_t>(n - 1);
  std::call_once(flags[i], [&] { table[i] = std::make_unique<const RuminOperators>(build(n)); });
  return *table[i];
}

MultiCovector RuminOperators::apply_d0(const MultiCovector& a) const {
  if (a.degree() > 2 * n_) return MultiCovector(n_, a.degree() + 1);
  return d0_.apply(a);
}

MultiCovector RuminOperators::apply_d0_pinv(const MultiCovector& a) const {
  if (a.degree() == 0) throw std::invalid_argument("d0^{-1} is not defined on 0-covectors");
  if (a.degree() > 2 * n_ + 1) return MultiCovector(n_, a.degree() - 1);
  return d0_pinv_.apply(a);
}

MultiCovector RuminOperators::apply_pi_E0(const MultiCovector& a) const { return pi_E0_.apply(a); }

PolyForm RuminOperators::apply_d0_pinv(const PolyForm& a) const {
  if (a.degree() == 0) throw std::invalid_argument("d0^{-1} is not defined on 0-forms");
  if (a.degree() > 2 * n_ + 1) return PolyForm(n_, a.degree() - 1);
  return apply_pointwise(d0_pinv_, a);
}

PolyForm RuminOperators::apply_pi_E0(const PolyForm& a) const { return apply_pointwise(pi_E0_, a); }

PolyForm RuminOperators::pi_E(const PolyForm& a) const {
  if (a.rank() != n_) throw std::invalid_argument("form lives on a group of different rank");
  PolyForm out = a;
  if (a.degree() < 2 * n_ + 1) out -= apply_d0_pinv(exterior_d(a));
  if (a.degree() > 0) out -= exterior_d(apply_d0_pinv(a));
  return out;
}

bool RuminOperators::in_E0(const PolyForm& a) const { return apply_pi_E0(a) == a; }

PolyForm RuminOperators::d_c(const PolyForm& a) const {
  if (!in_E0(a)) throw NotInE0("d_c needs a section of E0: Pi_E0 does not fix the input");
  if (a.degree() >= 2 * n_ + 1) return PolyForm(n_, a.degree() + 1);
  return apply_pi_E0(exterior_d(pi_E(a)));
}

GradedOperator d0_matrix(int n) { return RuminOperators::cached(n).d0(); }
GradedOperator d0_pinv(int n) { return RuminOperators::cached(n).d0_pinv(); }
GradedOperator pi_E0(int n) { return RuminOperators::cached(n).pi_E0(); }

RuminBasis e0_basis(int n, int h) {
  check_rank(n);
  if (h < 0 || h > 2 * n + 1) throw std::invalid_argument("degree out of range");
  RuminBasis out;
  out.n = n;
  out.degree = h;
  out.projector = RuminOperators::cached(n).pi_E0().block(h)->matrix;
  const int k = h <= n ? h : h - 1;
  const int power = h <= n ? n - h + 1 : 1;
  const auto basis_h = monomial::basis(n, k, Space::horizontal);
  RationalMatrix kernel;
  const GradedOperator lp = lefschetz_operator(n, power);
  const auto* block = lp.block(k);
  if (block == nullptr) {
    // L^power lands above the top horizontal degree: everything is in the kernel
    kernel = RationalMatrix::identity(basis_h.size());
  } else {
    kernel = block->matrix.kernel_basis();
  }
  for (std::size_t c = 0; c < kernel.cols(); ++c) {
    std::vector<Rational> v(kernel.rows());
    for (std::size_t r = 0; r < kernel.rows(); ++r) v[r] = kernel(r, c);
    MultiCovector e = MultiCovector::from_vector(n, k, v, Space::horizontal);
    if (h > n) e = wedge(theta(n), e);
    out.elements.push_back(std::move(e));
  }
  return out;
}

PolyForm pi_E(const PolyForm& a) { return RuminOperators::cached(a.rank()).pi_E(a); }
PolyForm d_c(const PolyForm& a) { return RuminOperators::cached(a.rank()).d_c(a); }

} // namespace heis
