#pragma once

#include "ospd/exactlin/echelon.hpp"
#include "ospd/superalg/graded_matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ospd::superalg {

using exactlin::Subspace;

enum class OrthoForm { identity, split };
std::string to_string(OrthoForm f);
OrthoForm parse_ortho_form(const std::string& text);

// Bilinear forms preserved by osp(m,2n): a symmetric form on the m even
// coordinates and the fixed symplectic form G = [[0, I_n], [-I_n, 0]].
struct BilinearFormSpec {
  OrthoForm ortho = OrthoForm::identity;

  // Identity form: I_m. Split form: [[0, I_h], [I_h, 0]] for m = 2h and
  // [[0, I_h, 0], [I_h, 0, 0], [0, 0, 1]] for m = 2h + 1.
  static ExactMatrix ortho_gram(std::size_t m, OrthoForm form);
  static ExactMatrix symplectic_gram(std::size_t n);
};

struct AlgebraLabel {
  std::string family;  // gl, sl, osp, o, sp, or a derived name
  std::vector<long> params;
  std::optional<OrthoForm> form;

  std::string str() const;
  friend bool operator==(const AlgebraLabel&, const AlgebraLabel&) = default;
};

struct NamedIdeal {
  std::string name;
  std::vector<GradedMatrix> basis;
};

// A matrix Lie superalgebra given by a homogeneous basis.
//
// Basis order is canonical: even elements precede odd ones; within a parity,
// elements supported on the diagonal come first, then the rest ordered by the
// row-major position of their first nonzero entry. Each element is scaled so
// that entry equals 1. Ideal bases are canonicalized the same way.
class Superalgebra {
 public:
  Superalgebra() = default;
  // Throws std::invalid_argument when the elements are linearly dependent.
  Superalgebra(AlgebraLabel label, BlockSizes sizes, std::vector<GradedMatrix> elements,
               std::vector<NamedIdeal> ideals = {});

  const AlgebraLabel& label() const { return label_; }
  BlockSizes sizes() const { return sizes_; }
  const std::vector<GradedMatrix>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t even_dim() const { return even_count_; }
  std::size_t odd_dim() const { return basis_.size() - even_count_; }
  std::vector<GradedMatrix> even_basis() const;
  std::vector<GradedMatrix> odd_basis() const;
  const std::vector<NamedIdeal>& ideals() const { return ideals_; }
  const NamedIdeal* ideal(const std::string& name) const;

  // Span of the row-major vectorized basis inside Q(i)^{(even+odd)^2}.
  const Subspace& span() const { return span_; }
  bool contains(const ExactMatrix& m) const { return span_.contains(m.vectorize()); }

  // When set, elements equal T * X * T^{-1} for X in a standard realization;
  // used to pull modules back before reading off highest weights.
  const std::optional<ExactMatrix>& conjugation() const { return conjugation_; }
  Superalgebra with_conjugation(ExactMatrix t) const;
  Superalgebra relabeled(AlgebraLabel label) const;

 private:
  AlgebraLabel label_;
  BlockSizes sizes_;
  std::vector<GradedMatrix> basis_;
  std::size_t even_count_ = 0;
  std::vector<NamedIdeal> ideals_;
  Subspace span_;
  std::optional<ExactMatrix> conjugation_;
};

// Puts a list of homogeneous elements into canonical order and scaling.
std::vector<GradedMatrix> canonical_order(std::vector<GradedMatrix> elements);

Subspace span_of(const std::vector<GradedMatrix>& elements, BlockSizes sizes);

struct ClosureReport {
  bool closed = false;
  bool inside_ambient = false;
  // First pair (i, j), i <= j, whose bracket leaves the span.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

ClosureReport is_closed_subalgebra(const std::vector<GradedMatrix>& basis, const Superalgebra& ambient);

}  // namespace ospd::superalg
