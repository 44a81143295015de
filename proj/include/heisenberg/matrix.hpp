#pragma once

#include "heisenberg/rational.hpp"

#include <cstddef>
#include <vector>

namespace heis {

/// Dense row-major matrix over exact rationals.
///
/// Everything here is plain Gaussian elimination; sizes stay below a few
/// hundred rows (the exterior algebra of the rank-4 group has 512 monomials).
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t size);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  bool is_zero() const;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref();

  std::size_t rank() const;
  /// Columns form a basis of the null space (cols x nullity).
  RationalMatrix kernel_basis() const;
  /// Columns form a basis of the column space (rows x rank), chosen among the
  /// original columns.
  RationalMatrix column_basis() const;
  /// Throws std::domain_error if singular.
  RationalMatrix inverse() const;
  /// Moore-Penrose pseudo-inverse via a full-rank factorisation A = C F:
  /// A^+ = F^T (F F^T)^{-1} (C^T C)^{-1} C^T.
  RationalMatrix pseudo_inverse() const;

  std::vector<double> to_double() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// [A | B] for equal row counts.
RationalMatrix hconcat(const RationalMatrix& a, const RationalMatrix& b);
/// [A ; B] for equal column counts.
RationalMatrix vconcat(const RationalMatrix& a, const RationalMatrix& b);

bool same_column_space(const RationalMatrix& a, const RationalMatrix& b);
bool same_kernel(const RationalMatrix& a, const RationalMatrix& b);

} // namespace heis
