#include "ospd/repmod/module_action.hpp"

#include <stdexcept>

namespace ospd::repmod {

namespace {

std::vector<Vector> vectorized(const std::vector<ExactMatrix>& ms) {
  std::vector<Vector> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(m.vectorize());
  return out;
}

ExactMatrix combine(const std::vector<ExactMatrix>& ms, const Vector& coeffs, std::size_t dim) {
  ExactMatrix out(dim, dim);
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (!coeffs[i].is_zero()) out += ms[i] * coeffs[i];
  return out;
}

}  // namespace

ExactMatrix ModuleAction::action_of(const ExactMatrix& x) const { return actions_of({x}).front(); }

std::vector<ExactMatrix> ModuleAction::actions_of(const std::vector<ExactMatrix>& xs) const {
  std::vector<ExactMatrix> out;
  if (acting.empty()) {
    for (const auto& x : xs) {
      if (!x.is_zero()) throw std::invalid_argument("action_of: module has no acting basis");
      out.emplace_back(dim, dim);
    }
    return out;
  }
  const std::size_t amb = acting.front().rows() * acting.front().cols();
  CoordinateSystem cs(vectorized(acting), amb);
  for (const auto& x : xs) {
    auto c = cs.coordinates(x.vectorize());
    if (!c) throw std::invalid_argument("action_of: element is outside the acting algebra");
    out.push_back(combine(matrices, *c, dim));
  }
  return out;
}

bool ModuleAction::is_homomorphism() const {
  if (acting.size() != matrices.size()) return false;
  if (acting.empty()) return true;
  const std::size_t amb = acting.front().rows() * acting.front().cols();
  CoordinateSystem cs(vectorized(acting), amb);
  for (std::size_t i = 0; i < acting.size(); ++i)
    for (std::size_t j = i + 1; j < acting.size(); ++j) {
      auto c = cs.coordinates(exactlin::commutator(acting[i], acting[j]).vectorize());
      if (!c) return false;
      if (!(combine(matrices, *c, dim) == exactlin::commutator(matrices[i], matrices[j]))) return false;
    }
  return true;
}

ModuleAction natural_action(const std::vector<GradedMatrix>& even_elements, NaturalBlock which) {
  ModuleAction m;
  for (const auto& x : even_elements) {
    if (x.parity() != superalg::Parity::even) throw superalg::NonHomogeneousError("natural_action: odd element");
    m.acting.push_back(x.entries());
    m.matrices.push_back(which == NaturalBlock::V ? superalg::even_block(x) : superalg::odd_block(x));
  }
  return m;
}

ModuleAction restrict_natural_action(const superalg::Superalgebra& a, NaturalBlock which) {
  ModuleAction m = natural_action(a.even_basis(), which);
  m.dim = which == NaturalBlock::V ? a.sizes().even : a.sizes().odd;
  return m;
}

ModuleAction adjoint_action(const std::vector<GradedMatrix>& acting, const std::vector<GradedMatrix>& module_basis) {
  ModuleAction m;
  m.dim = module_basis.size();
  if (module_basis.empty()) {
    for (const auto& a : acting) {
      m.acting.push_back(a.entries());
      m.matrices.emplace_back(0, 0);
    }
    return m;
  }
  const std::size_t t = module_basis.front().sizes().total();
  std::vector<Vector> vecs;
  for (const auto& b : module_basis) vecs.push_back(b.vectorize());
  CoordinateSystem cs(std::move(vecs), t * t);
  for (const auto& a : acting) {
    ExactMatrix r(m.dim, m.dim);
    for (std::size_t j = 0; j < module_basis.size(); ++j) {
      Vector c = cs.coordinates_or_throw(superalg::superbracket(a, module_basis[j]).vectorize());
      for (std::size_t i = 0; i < m.dim; ++i) r(i, j) = c[i];
    }
    m.acting.push_back(a.entries());
    m.matrices.push_back(std::move(r));
  }
  return m;
}

ModuleAction defining_action(const std::vector<ExactMatrix>& basis) {
  ModuleAction m;
  m.acting = basis;
  m.matrices = basis;
  m.dim = basis.empty() ? 0 : basis.front().rows();
  return m;
}

ModuleAction outer_tensor(const ModuleAction& u1, const ModuleAction& u2) {
  ModuleAction out;
  out.dim = u1.dim * u2.dim;
  const std::size_t a1 = u1.acting.empty() ? 0 : u1.acting.front().rows();
  const std::size_t a2 = u2.acting.empty() ? 0 : u2.acting.front().rows();
  const ExactMatrix id1 = ExactMatrix::identity(u1.dim);
  const ExactMatrix id2 = ExactMatrix::identity(u2.dim);
  for (std::size_t i = 0; i < u1.matrices.size(); ++i) {
    out.acting.push_back(exactlin::block_diagonal(u1.acting.empty() ? ExactMatrix(a1, a1) : u1.acting[i],
                                                  ExactMatrix(a2, a2)));
    out.matrices.push_back(exactlin::kronecker(u1.matrices[i], id2));
  }
  for (std::size_t i = 0; i < u2.matrices.size(); ++i) {
    out.acting.push_back(exactlin::block_diagonal(ExactMatrix(a1, a1),
                                                  u2.acting.empty() ? ExactMatrix(a2, a2) : u2.acting[i]));
    out.matrices.push_back(exactlin::kronecker(id1, u2.matrices[i]));
  }
  return out;
}

ModuleAction restrict_action(const ModuleAction& m, const std::vector<ExactMatrix>& acting) {
  ModuleAction out;
  out.dim = m.dim;
  out.acting = acting;
  out.matrices = m.actions_of(acting);
  return out;
}

std::vector<ExactMatrix> restricted_matrices(const std::vector<ExactMatrix>& matrices, const std::vector<Vector>& basis) {
  std::vector<ExactMatrix> out;
  if (basis.empty()) {
    out.assign(matrices.size(), ExactMatrix(0, 0));
    return out;
  }
  CoordinateSystem cs(basis, basis.front().size());
  const std::size_t d = basis.size();
  for (const auto& r : matrices) {
    ExactMatrix s(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      Vector c = cs.coordinates_or_throw(r.apply(basis[j]));
      for (std::size_t i = 0; i < d; ++i) s(i, j) = c[i];
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace ospd::repmod
