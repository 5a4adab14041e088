#pragma once

#include "ospd/repmod/module_action.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace ospd::repmod {

class SplittingFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Type of an irreducible even-part component by which ideal acts nontrivially:
// 1 trivial, 2 only I1, 3 only I2, 4 both. `unclassified` covers components
// on which only the remaining (central) part acts.
enum class ModuleType { type1 = 1, type2 = 2, type3 = 3, type4 = 4, unclassified = 0 };
std::string to_string(ModuleType t);

struct ModuleComponent {
  std::vector<Vector> basis;  // vectors of the module space
  Subspace subspace;
  ModuleType type = ModuleType::unclassified;
  std::optional<std::vector<long long>> highest_weight;

  std::size_t dim() const { return basis.size(); }
};

// Splits a completely reducible module into irreducible components.
//
// A component is found as the closure of a candidate vector (common kernel,
// joint eigenvectors, basis vectors, then seeded random vectors) and accepted
// once its commutant is the scalars; the invariant complement comes from
// solving A Pi - Pi D = -B for an equivariant projection. Components are
// returned in discovery order. Throws SplittingFailure when no invariant
// complement exists or no irreducible piece can be found.
std::vector<ModuleComponent> decompose_module(const ModuleAction& m, std::uint64_t seed = 0);

// Absolute irreducibility via the associative envelope: true iff the algebra
// generated by the identity and the action matrices has dimension dim^2.
bool burnside_irreducible(const ModuleAction& m);
bool burnside_irreducible(const std::vector<ExactMatrix>& matrices, std::size_t dim);
std::size_t envelope_dimension(const std::vector<ExactMatrix>& matrices, std::size_t dim);

// Smallest invariant subspace containing v.
Subspace invariant_closure(const std::vector<ExactMatrix>& matrices, const Vector& v);

// True when every matrix maps span(basis) into itself.
bool is_invariant(const std::vector<ExactMatrix>& matrices, const std::vector<Vector>& basis);

// Classifies a component by whether i1 / i2 / rest act as zero on it.
ModuleType classify_type(const ModuleComponent& c, const std::vector<ExactMatrix>& i1,
                         const std::vector<ExactMatrix>& i2, const std::vector<ExactMatrix>& rest = {});

// Action of an odd element's W-by-V block between a V component and a W
// component, in the components' bases: rows index w_j, columns index v_i.
struct ProjectionView {
  std::size_t source = 0;  // V component index
  std::size_t target = 0;  // W component index
  std::vector<ExactMatrix> matrices;
};

ProjectionView projection_view(const std::vector<GradedMatrix>& odd_elements, const std::vector<ModuleComponent>& v_parts,
                               const std::vector<ModuleComponent>& w_parts, std::size_t i, std::size_t j);

}  // namespace ospd::repmod
