#include "ospd/exactlin/echelon.hpp"

#include <algorithm>
#include <numeric>

namespace ospd::exactlin {

namespace {

// Multiplier that turns every entry of the row into a Gaussian integer.
Rational denominator_lcm(std::span<const Scalar> row) {
  mpz_class l = 1;
  bool any = false;
  for (const auto& x : row) {
    for (const Rational* part : {&x.re(), &x.im()}) {
      if (part->is_zero() || part->is_integer()) continue;
      mpz_class d = part->to_mpq().get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      any = true;
    }
  }
  if (!any) return Rational(1);
  return Rational(mpq_class(l));
}

}  // namespace

RrefResult rref(const ExactMatrix& input) {
  ExactMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t i = 0; i < rows; ++i) {
    Rational scale = denominator_lcm(m.row(i));
    if (!scale.is_one())
      for (auto& x : m.row(i)) x *= Scalar(scale);
  }

  RrefResult out;
  Scalar prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Scalar pivot = m(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Scalar lead = m(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        Scalar v = pivot * m(i, j);
        sub_mul(v, lead, m(r, j));
        if (!v.is_zero() && !prev.is_one()) v /= prev;
        m(i, j) = std::move(v);
      }
      m(i, c) = Scalar();
    }
    prev = pivot;
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;

  // Back substitution to reduced form.
  for (std::size_t k = r; k-- > 0;) {
    const std::size_t c = out.pivots[k];
    const Scalar inv = m(k, c).inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!m(k, j).is_zero()) m(k, j) *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      const Scalar f = m(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < cols; ++j) sub_mul(m(i, j), f, m(k, j));
    }
  }
  for (std::size_t i = r; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar();
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

std::vector<Vector> nullspace(const ExactMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = Scalar(1);
    for (std::size_t k = 0; k < r.rank; ++k) v[r.pivots[k]] = -r.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector EchelonBasis::reduce(Vector v) const {
  if (v.size() != ambient_) throw DimensionError("EchelonBasis::reduce: length mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = v[pivots_[k]];
    if (c.is_zero()) continue;
    const Vector& row = rows_[k];
    for (std::size_t j : support_[k]) sub_mul(v[j], c, row[j]);
  }
  return v;
}

bool EchelonBasis::insert(const Vector& v) {
  Vector w = reduce(v);
  auto first = std::find_if(w.begin(), w.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (first == w.end()) return false;
  const std::size_t p = static_cast<std::size_t>(first - w.begin());
  const Scalar inv = w[p].inverse();
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j].is_zero()) continue;
    w[j] *= inv;
    support.push_back(j);
  }
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar f = rows_[k][p];
    if (f.is_zero()) continue;
    Vector& row = rows_[k];
    for (std::size_t j : support) sub_mul(row[j], f, w[j]);
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) s.push_back(j);
    support_[k] = std::move(s);
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  support_.push_back(std::move(support));
  return true;
}

std::vector<Vector> EchelonBasis::sorted_rows() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<Vector> out;
  out.reserve(rows_.size());
  for (auto k : order) out.push_back(rows_[k]);
  return out;
}

std::vector<std::size_t> EchelonBasis::sorted_pivots() const {
  std::vector<std::size_t> p = pivots_;
  std::sort(p.begin(), p.end());
  return p;
}

Subspace Subspace::span(std::span<const Vector> vectors, std::size_t ambient) {
  EchelonBasis e(ambient);
  for (const auto& v : vectors) e.insert(v);
  return from_echelon(e);
}

Subspace Subspace::from_echelon(const EchelonBasis& basis) {
  Subspace s(basis.ambient_dim());
  s.basis_ = basis.sorted_rows();
  s.pivots_ = basis.sorted_pivots();
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector e(ambient);
    e[i] = Scalar(1);
    s.basis_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

bool Subspace::contains(const Vector& v) const { return solve_membership(v, *this).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("Subspace::contains: ambient mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& v) { return contains(v); });
}

Vector Subspace::coordinates_unchecked(const Vector& v) const {
  Vector c(pivots_.size());
  for (std::size_t k = 0; k < pivots_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace_sum: ambient dimension mismatch");
  EchelonBasis e(a.ambient_dim());
  for (const auto& v : a.basis()) e.insert(v);
  for (const auto& v : b.basis()) e.insert(v);
  return Subspace::from_echelon(e);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace_intersect: ambient dimension mismatch");
  const std::size_t n = a.ambient_dim();
  EchelonBasis e(2 * n);
  for (const auto& v : a.basis()) {
    Vector w(2 * n);
    std::copy(v.begin(), v.end(), w.begin());
    std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(n));
    e.insert(w);
  }
  for (const auto& v : b.basis()) {
    Vector w(2 * n);
    std::copy(v.begin(), v.end(), w.begin());
    e.insert(w);
  }
  std::vector<Vector> inter;
  auto rows = e.sorted_rows();
  auto piv = e.sorted_pivots();
  for (std::size_t k = 0; k < rows.size(); ++k)
    if (piv[k] >= n) inter.emplace_back(rows[k].begin() + static_cast<std::ptrdiff_t>(n), rows[k].end());
  return Subspace::span(inter, n);
}

std::optional<Vector> solve_membership(const Vector& v, const Subspace& a) {
  if (v.size() != a.ambient_dim()) throw DimensionError("solve_membership: length mismatch");
  Vector coords = a.coordinates_unchecked(v);
  Vector residual = v;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k].is_zero()) continue;
    const Vector& row = a.basis()[k];
    for (std::size_t j = 0; j < row.size(); ++j) sub_mul(residual[j], coords[k], row[j]);
  }
  if (!is_zero(residual)) return std::nullopt;
  return coords;
}

CoordinateSystem::CoordinateSystem(std::vector<Vector> basis, std::size_t ambient)
    : ambient_(ambient), basis_(std::move(basis)) {
  const std::size_t r = basis_.size();
  EchelonBasis e(ambient_ + r);
  for (std::size_t i = 0; i < r; ++i) {
    if (basis_[i].size() != ambient_) throw DimensionError("CoordinateSystem: length mismatch");
    Vector w(ambient_ + r);
    std::copy(basis_[i].begin(), basis_[i].end(), w.begin());
    w[ambient_ + i] = Scalar(1);
    e.insert(w);
  }
  auto rows = e.sorted_rows();
  auto piv = e.sorted_pivots();
  std::vector<Vector> left;
  transform_ = ExactMatrix(r, r);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (piv[k] >= ambient_) throw std::invalid_argument("CoordinateSystem: basis vectors are linearly dependent");
    left.emplace_back(rows[k].begin(), rows[k].begin() + static_cast<std::ptrdiff_t>(ambient_));
    for (std::size_t i = 0; i < r; ++i) transform_(k, i) = rows[k][ambient_ + i];
  }
  span_ = Subspace::span(left, ambient_);
}

std::optional<Vector> CoordinateSystem::coordinates(const Vector& v) const {
  auto c = solve_membership(v, span_);
  if (!c) return std::nullopt;
  Vector out(basis_.size());
  for (std::size_t k = 0; k < c->size(); ++k) {
    if ((*c)[k].is_zero()) continue;
    for (std::size_t i = 0; i < out.size(); ++i) sub_mul(out[i], -(*c)[k], transform_(k, i));
  }
  return out;
}

Vector CoordinateSystem::coordinates_or_throw(const Vector& v) const {
  auto c = coordinates(v);
  if (!c) throw std::domain_error("CoordinateSystem: vector outside the span");
  return *c;
}

Vector CoordinateSystem::combine(const Vector& coords) const {
  Vector out(ambient_);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) sub_mul(out[j], -coords[i], basis_[i][j]);
  }
  return out;
}

std::optional<Vector> solve_left(const ExactMatrix& m, const Vector& rhs) {
  const std::size_t r = m.rows();
  const std::size_t n = m.cols();
  if (rhs.size() != n) throw DimensionError("solve_left: length mismatch");
  EchelonBasis e(n + r);
  for (std::size_t i = 0; i < r; ++i) {
    Vector w(n + r);
    std::copy(m.row(i).begin(), m.row(i).end(), w.begin());
    w[n + i] = Scalar(1);
    e.insert(w);
  }
  Vector target(n + r);
  std::copy(rhs.begin(), rhs.end(), target.begin());
  Vector red = e.reduce(target);
  for (std::size_t j = 0; j < n; ++j)
    if (!red[j].is_zero()) return std::nullopt;
  Vector x(r);
  for (std::size_t i = 0; i < r; ++i) x[i] = -red[n + i];
  return x;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse: non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, ExactMatrix::identity(n));
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] >= n) throw std::domain_error("inverse: singular matrix");
  return r.reduced.block(0, n, n, n);
}

}  // namespace ospd::exactlin
