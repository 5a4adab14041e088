#include "ospd/exactlin/matrix.hpp"

#include <algorithm>
#include <string>

namespace ospd::exactlin {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ExactMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

ExactMatrix ExactMatrix::unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  ExactMatrix m(rows, cols);
  m(i, j) = Scalar(1);
  return m;
}

ExactMatrix ExactMatrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  ExactMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("ExactMatrix::from_rows: row length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

ExactMatrix ExactMatrix::from_vector(const Vector& flat, std::size_t rows, std::size_t cols) {
  if (flat.size() != rows * cols) throw DimensionError("ExactMatrix::from_vector: size mismatch");
  ExactMatrix m(rows, cols);
  m.data_ = flat;
  return m;
}

Vector ExactMatrix::column_vector(std::size_t j) const {
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool ExactMatrix::is_canonical() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_canonical(); });
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("ExactMatrix::block out of range");
  ExactMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void ExactMatrix::set_block(std::size_t r0, std::size_t c0, const ExactMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("ExactMatrix::set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Scalar ExactMatrix::trace() const {
  if (rows_ != cols_) throw DimensionError("ExactMatrix::trace of non-square matrix");
  Scalar t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("ExactMatrix: sum size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!rhs.data_[k].is_zero()) data_[k] += rhs.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("ExactMatrix: difference size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!rhs.data_[k].is_zero()) data_[k] -= rhs.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Scalar& s) {
  if (s.is_one()) return *this;
  for (auto& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionError("ExactMatrix: product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                         " and " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  ExactMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

Vector ExactMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionError("ExactMatrix::apply: size mismatch");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (!b(p, q).is_zero()) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

ExactMatrix block_diagonal(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector scaled(const Vector& v, const Scalar& s) {
  Vector out(v);
  for (auto& x : out)
    if (!x.is_zero()) x *= s;
  return out;
}

}  // namespace ospd::exactlin
