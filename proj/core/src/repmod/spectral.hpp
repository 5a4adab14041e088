#pragma once

// Eigenvalue helpers private to repmod. Every action in scope has eigenvalues
// that are Gaussian rationals whenever they lie in Q(i) at all; after scaling a
// matrix to Gaussian-integer entries those eigenvalues are Gaussian integers,
// so a bounded scan of the Gershgorin discs finds all of them exactly.

#include "ospd/exactlin/echelon.hpp"

#include <vector>

namespace ospd::repmod::detail {

using exactlin::ExactMatrix;
using exactlin::Scalar;
using exactlin::Vector;

// Coefficients c[0..n] of det(x I - a), c[n] = 1 (Faddeev-LeVerrier).
std::vector<Scalar> char_poly(const ExactMatrix& a);

// Distinct eigenvalues of `a` lying in Q(i). Returns an empty list when the
// Gershgorin scan would exceed `max_points` lattice points.
std::vector<Scalar> rational_eigenvalues(const ExactMatrix& a, std::size_t max_points = 40000);

// Basis of ker(a - lambda I).
std::vector<Vector> eigenspace(const ExactMatrix& a, const Scalar& lambda);

bool is_scalar_matrix(const ExactMatrix& a);

// Maps local coordinates against `basis` back to ambient vectors.
Vector combine(const std::vector<Vector>& basis, const Vector& coords);

// Common kernel of all matrices.
std::vector<Vector> common_kernel(const std::vector<ExactMatrix>& mats, std::size_t dim);

// Splits the space into joint eigenspaces: every piece is refined by each
// matrix that preserves it and has eigenvalues in Q(i). Pieces are returned
// as bases in ambient coordinates.
std::vector<std::vector<Vector>> joint_eigenspaces(const std::vector<ExactMatrix>& mats,
                                                   const std::vector<Vector>& start);

}  // namespace ospd::repmod::detail
