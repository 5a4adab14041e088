#pragma once

#include "ospd/exactlin/gaussian_rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace ospd::exactlin {

using Scalar = GaussianRational;
using Vector = std::vector<Scalar>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Dense row-major matrix over Q(i).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ExactMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);
  static ExactMatrix identity(std::size_t n);
  static ExactMatrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
  static ExactMatrix from_rows(std::span<const Vector> rows, std::size_t cols);
  // Inverse of vectorize(): reshapes a row-major flattening.
  static ExactMatrix from_vector(const Vector& flat, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector row_vector(std::size_t i) const { return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_}; }
  Vector column_vector(std::size_t j) const;

  // Row-major flattening; the coordinate convention for every span computation.
  const Vector& vectorize() const { return data_; }

  bool is_zero() const;
  bool is_canonical() const;
  ExactMatrix transpose() const;
  ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const ExactMatrix& b);
  Scalar trace() const;

  ExactMatrix& operator+=(const ExactMatrix& rhs);
  ExactMatrix& operator-=(const ExactMatrix& rhs);
  ExactMatrix& operator*=(const Scalar& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const Scalar& s) { return a *= s; }
  friend ExactMatrix operator*(const Scalar& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator-(ExactMatrix a) { return a *= Scalar(-1); }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Vector apply(const Vector& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix block_diagonal(const ExactMatrix& a, const ExactMatrix& b);
bool is_zero(const Vector& v);
Vector scaled(const Vector& v, const Scalar& s);

}  // namespace ospd::exactlin
