#include "ospd/superalg/superalgebra.hpp"

#include <algorithm>
#include <sstream>

namespace ospd::superalg {

std::string to_string(OrthoForm f) { return f == OrthoForm::identity ? "identity" : "split"; }

OrthoForm parse_ortho_form(const std::string& text) {
  if (text == "identity") return OrthoForm::identity;
  if (text == "split") return OrthoForm::split;
  throw std::invalid_argument("unknown orthogonal form '" + text + "' (expected identity|split)");
}

ExactMatrix BilinearFormSpec::ortho_gram(std::size_t m, OrthoForm form) {
  if (form == OrthoForm::identity) return ExactMatrix::identity(m);
  const std::size_t h = m / 2;
  ExactMatrix j(m, m);
  for (std::size_t i = 0; i < h; ++i) {
    j(i, h + i) = Scalar(1);
    j(h + i, i) = Scalar(1);
  }
  if (m % 2 == 1) j(m - 1, m - 1) = Scalar(1);
  return j;
}

ExactMatrix BilinearFormSpec::symplectic_gram(std::size_t n) {
  ExactMatrix g(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, n + i) = Scalar(1);
    g(n + i, i) = Scalar(-1);
  }
  return g;
}

std::string AlgebraLabel::str() const {
  std::ostringstream os;
  os << family;
  if (!params.empty()) {
    os << "(";
    for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
    os << ")";
  }
  return os.str();
}

namespace {

struct SortKey {
  int parity;
  int off_diagonal;
  std::size_t first;
};

SortKey sort_key(const GradedMatrix& g) {
  const ExactMatrix& m = g.entries();
  bool diagonal = true;
  std::size_t first = m.rows() * m.cols();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      if (i != j) diagonal = false;
      first = std::min(first, i * m.cols() + j);
    }
  return {static_cast<int>(g.parity()), diagonal ? 0 : 1, first};
}

GradedMatrix normalize_leading(const GradedMatrix& g) {
  const Vector& v = g.vectorize();
  auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (it == v.end() || it->is_one()) return g;
  return {g.sizes(), g.entries() * it->inverse(), g.parity()};
}

}  // namespace

std::vector<GradedMatrix> canonical_order(std::vector<GradedMatrix> elements) {
  for (auto& e : elements) e = normalize_leading(e);
  std::vector<std::pair<SortKey, std::size_t>> keyed;
  keyed.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) keyed.emplace_back(sort_key(elements[i]), i);
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    const SortKey& x = a.first;
    const SortKey& y = b.first;
    if (x.parity != y.parity) return x.parity < y.parity;
    if (x.off_diagonal != y.off_diagonal) return x.off_diagonal < y.off_diagonal;
    return x.first < y.first;
  });
  std::vector<GradedMatrix> out;
  out.reserve(elements.size());
  for (const auto& [key, idx] : keyed) out.push_back(std::move(elements[idx]));
  return out;
}

Subspace span_of(const std::vector<GradedMatrix>& elements, BlockSizes sizes) {
  const std::size_t n = sizes.total();
  exactlin::EchelonBasis e(n * n);
  for (const auto& g : elements) e.insert(g.vectorize());
  return Subspace::from_echelon(e);
}

Superalgebra::Superalgebra(AlgebraLabel label, BlockSizes sizes, std::vector<GradedMatrix> elements,
                           std::vector<NamedIdeal> ideals)
    : label_(std::move(label)), sizes_(sizes), ideals_(std::move(ideals)) {
  for (const auto& g : elements)
    if (!(g.sizes() == sizes_)) throw exactlin::DimensionError("Superalgebra: element block sizes differ");
  basis_ = canonical_order(std::move(elements));
  even_count_ = static_cast<std::size_t>(
      std::count_if(basis_.begin(), basis_.end(), [](const GradedMatrix& g) { return g.parity() == Parity::even; }));
  span_ = span_of(basis_, sizes_);
  if (span_.dim() != basis_.size())
    throw std::invalid_argument("Superalgebra " + label_.str() + ": basis is linearly dependent");
  for (auto& ideal : ideals_) ideal.basis = canonical_order(std::move(ideal.basis));
}

std::vector<GradedMatrix> Superalgebra::even_basis() const {
  return {basis_.begin(), basis_.begin() + static_cast<std::ptrdiff_t>(even_count_)};
}

std::vector<GradedMatrix> Superalgebra::odd_basis() const {
  return {basis_.begin() + static_cast<std::ptrdiff_t>(even_count_), basis_.end()};
}

const NamedIdeal* Superalgebra::ideal(const std::string& name) const {
  for (const auto& i : ideals_)
    if (i.name == name) return &i;
  return nullptr;
}

Superalgebra Superalgebra::with_conjugation(ExactMatrix t) const {
  Superalgebra copy = *this;
  copy.conjugation_ = std::move(t);
  return copy;
}

Superalgebra Superalgebra::relabeled(AlgebraLabel label) const {
  Superalgebra copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

ClosureReport is_closed_subalgebra(const std::vector<GradedMatrix>& basis, const Superalgebra& ambient) {
  ClosureReport report;
  for (const auto& g : basis)
    if (!(g.sizes() == ambient.sizes())) throw exactlin::DimensionError("is_closed_subalgebra: block sizes differ");
  Subspace span = span_of(basis, ambient.sizes());
  report.inside_ambient = ambient.span().contains(span);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      GradedMatrix b = superbracket(basis[i], basis[j]);
      if (!span.contains(b.vectorize())) {
        report.violation = std::make_pair(i, j);
        return report;
      }
    }
  }
  report.closed = true;
  return report;
}

}  // namespace ospd::superalg
