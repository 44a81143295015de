#include "heisenberg/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace heis {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t size) {
  RationalMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& q : data_)
    if (sgn(q) != 0) return false;
  return true;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (sgn(a) != 0 && sgn(v[c]) != 0) acc += a * v[c];
    }
    out[r] = acc;
  }
  return out;
}

std::vector<std::size_t> RationalMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && sgn((*this)(pivot, col)) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(pivot, c), (*this)(row, c));
    Rational inv = 1 / (*this)(row, col);
    for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || sgn((*this)(r, col)) == 0) continue;
      Rational factor = (*this)(r, col);
      for (std::size_t c = col; c < cols_; ++c)
        if (sgn((*this)(row, c)) != 0) (*this)(r, c) -= factor * (*this)(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix copy = *this;
  return copy.rref().size();
}

RationalMatrix RationalMatrix::kernel_basis() const {
  RationalMatrix reduced = *this;
  auto pivots = reduced.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RationalMatrix basis(cols_, free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    std::size_t f = free_cols[j];
    basis(f, j) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], j) = -reduced(i, f);
  }
  return basis;
}

RationalMatrix RationalMatrix::column_basis() const {
  RationalMatrix reduced = *this;
  auto pivots = reduced.rref();
  RationalMatrix basis(rows_, pivots.size());
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t r = 0; r < rows_; ++r) basis(r, j) = (*this)(r, pivots[j]);
  return basis;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw std::domain_error("inverse of a non-square matrix");
  RationalMatrix aug = hconcat(*this, identity(rows_));
  auto pivots = aug.rref();
  if (pivots.size() < rows_ || (rows_ > 0 && pivots[rows_ - 1] >= rows_))
    throw std::domain_error("singular matrix");
  RationalMatrix inv(rows_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < rows_; ++c) inv(r, c) = aug(r, rows_ + c);
  return inv;
}

RationalMatrix RationalMatrix::pseudo_inverse() const {
  RationalMatrix reduced = *this;
  auto pivots = reduced.rref();
  const std::size_t r = pivots.size();
  if (r == 0) return RationalMatrix(cols_, rows_);
  RationalMatrix c(rows_, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < rows_; ++i) c(i, j) = (*this)(i, pivots[j]);
  RationalMatrix f(r, cols_);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols_; ++j) f(i, j) = reduced(i, j);
  RationalMatrix ft = f.transpose();
  RationalMatrix ct = c.transpose();
  return ft * (f * ft).inverse() * (ct * c).inverse() * ct;
}

std::vector<double> RationalMatrix::to_double() const {
  std::vector<double> out(data_.size());
  for (std::size_t i = 0; i < data_.size(); ++i) out[i] = data_[i].get_d();
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum size mismatch");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix difference size mismatch");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix out = a;
  for (auto& q : out.data_) q *= s;
  return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RationalMatrix hconcat(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat row mismatch");
  RationalMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

RationalMatrix vconcat(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vconcat column mismatch");
  RationalMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(a.rows() + r, c) = b(r, c);
  return out;
}

bool same_column_space(const RationalMatrix& a, const RationalMatrix& b) {
  const auto ra = a.rank();
  return ra == b.rank() && ra == hconcat(a, b).rank();
}

bool same_kernel(const RationalMatrix& a, const RationalMatrix& b) {
  // ker A = ker B iff the row spaces coincide.
  const auto ra = a.rank();
  return ra == b.rank() && ra == vconcat(a, b).rank();
}

} // namespace heis
