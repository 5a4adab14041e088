#pragma once

#include "ospd/exactlin/echelon.hpp"
#include "ospd/superalg/superalgebra.hpp"

#include <vector>

namespace ospd::repmod {

using exactlin::CoordinateSystem;
using exactlin::ExactMatrix;
using exactlin::Scalar;
using exactlin::Subspace;
using exactlin::Vector;
using superalg::GradedMatrix;

// A representation of a matrix Lie algebra: acting[i] acts on F^dim through
// matrices[i] (column-vector convention). `acting` holds the elements in the
// realization of the acting algebra; it may be empty for bare matrix sets.
struct ModuleAction {
  std::vector<ExactMatrix> acting;
  std::size_t dim = 0;
  std::vector<ExactMatrix> matrices;

  // Matrix of an arbitrary element of span(acting). Throws std::invalid_argument
  // when x is outside that span.
  ExactMatrix action_of(const ExactMatrix& x) const;
  std::vector<ExactMatrix> actions_of(const std::vector<ExactMatrix>& xs) const;
  // Checks that the matrix of [a_i, a_j] equals the commutator of the matrices.
  bool is_homomorphism() const;
};

enum class NaturalBlock { V, W };

// The even part of `a` acting on its first (V) or second (W) coordinate block.
ModuleAction restrict_natural_action(const superalg::Superalgebra& a, NaturalBlock which);
ModuleAction natural_action(const std::vector<GradedMatrix>& even_elements, NaturalBlock which);

// ad action of `acting` on span(module_basis), expressed in module_basis
// coordinates. Throws std::invalid_argument when the span is not invariant.
ModuleAction adjoint_action(const std::vector<GradedMatrix>& acting, const std::vector<GradedMatrix>& module_basis);

// Defining action of a list of square matrices.
ModuleAction defining_action(const std::vector<ExactMatrix>& basis);

// X(v) (x) w + v (x) Y(w) for X in the first algebra and Y in the second; the
// acting algebra is realized block-diagonally as diag(X, 0) and diag(0, Y).
ModuleAction outer_tensor(const ModuleAction& u1, const ModuleAction& u2);

// The same module viewed through a new list of acting elements, each of which
// must lie in span(m.acting).
ModuleAction restrict_action(const ModuleAction& m, const std::vector<ExactMatrix>& acting);

// Matrices of m restricted to the invariant subspace spanned by `basis`
// (coordinates against that basis). Throws when the span is not invariant.
std::vector<ExactMatrix> restricted_matrices(const std::vector<ExactMatrix>& matrices, const std::vector<Vector>& basis);

}  // namespace ospd::repmod
