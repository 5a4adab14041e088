#pragma once

#include "ospd/exactlin/matrix.hpp"

#include <optional>
#include <vector>

namespace ospd::exactlin {

struct RrefResult {
  ExactMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // strictly increasing
};

// Reduced row echelon form. Forward elimination is fraction-free (Bareiss)
// on rows scaled to Gaussian integers; the final pass normalizes pivots to 1.
RrefResult rref(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Vector> nullspace(const ExactMatrix& m);

// Mutable reduced echelon basis used to grow a span one vector at a time.
// Rows are kept fully reduced (each pivot column is zero in every other row),
// so reduction against the basis is a single pass.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }

  // Residual of v modulo the current span.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return is_zero(reduce(v)); }
  // Adds v; returns false when v is already in the span.
  bool insert(const Vector& v);

  // Rows sorted by pivot column.
  std::vector<Vector> sorted_rows() const;
  std::vector<std::size_t> sorted_pivots() const;

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::size_t>> support_;
};

// Immutable subspace of Q(i)^n, stored as its reduced echelon basis.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
  static Subspace span(std::span<const Vector> vectors, std::size_t ambient);
  static Subspace from_echelon(const EchelonBasis& basis);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates against basis(); these are just the pivot entries of v.
  Vector coordinates_unchecked(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
// Zassenhaus intersection.
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
// Coordinates of v against a.basis(), or nullopt when v is not in a.
std::optional<Vector> solve_membership(const Vector& v, const Subspace& a);

// Coordinates against an arbitrary linearly independent list of vectors.
class CoordinateSystem {
 public:
  CoordinateSystem() = default;
  // Throws std::invalid_argument when the vectors are dependent.
  CoordinateSystem(std::vector<Vector> basis, std::size_t ambient);

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<Vector>& basis() const { return basis_; }
  const Subspace& span() const { return span_; }

  std::optional<Vector> coordinates(const Vector& v) const;
  // Throws when v is outside the span.
  Vector coordinates_or_throw(const Vector& v) const;
  Vector combine(const Vector& coords) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  Subspace span_;
  ExactMatrix transform_;  // rows of span_.basis() as combinations of basis_
};

// Solution x of x * m = rhs (row-vector convention), or nullopt.
std::optional<Vector> solve_left(const ExactMatrix& m, const Vector& rhs);
ExactMatrix inverse(const ExactMatrix& m);

}  // namespace ospd::exactlin
