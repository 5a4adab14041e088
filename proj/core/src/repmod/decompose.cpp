#include "ospd/repmod/decompose.hpp"

#include "spectral.hpp"

#include <algorithm>
#include <random>

namespace ospd::repmod {

using exactlin::EchelonBasis;
using Mats = std::vector<ExactMatrix>;

std::string to_string(ModuleType t) {
  switch (t) {
    case ModuleType::type1: return "1";
    case ModuleType::type2: return "2";
    case ModuleType::type3: return "3";
    case ModuleType::type4: return "4";
    case ModuleType::unclassified: break;
  }
  return "unclassified";
}

namespace {

struct Krylov {
  std::vector<Vector> vecs;  // v, then images under single matrices
  std::vector<std::pair<std::size_t, std::size_t>> word;  // (parent, matrix) for vecs[j], j >= 1
};

Krylov krylov(const Mats& r, const Vector& v) {
  Krylov k;
  const std::size_t n = v.size();
  EchelonBasis e(n);
  if (!e.insert(v)) return k;
  k.vecs.push_back(v);
  k.word.emplace_back(0, 0);
  for (std::size_t idx = 0; idx < k.vecs.size() && e.dim() < n; ++idx)
    for (std::size_t m = 0; m < r.size() && e.dim() < n; ++m) {
      Vector u = r[m].apply(k.vecs[idx]);
      if (e.insert(u)) {
        k.vecs.push_back(std::move(u));
        k.word.emplace_back(idx, m);
      }
    }
  return k;
}

// Dimension test for the commutant of a cyclic module equal to 1. In Krylov
// coordinates b_j = W_j b_0, and a commuting X is fixed by u = X b_0 through
// X b_j = W_j u. We collect the linear conditions S_k X = X S_k on u and stop
// as soon as only the scalars survive.
bool cyclic_commutant_is_scalar(const Mats& r, const Krylov& k) {
  const std::size_t c = k.vecs.size();
  if (c <= 1) return true;
  Mats s = restricted_matrices(r, k.vecs);
  Mats w(c);
  w[0] = ExactMatrix::identity(c);
  for (std::size_t j = 1; j < c; ++j) w[j] = s[k.word[j].second] * w[k.word[j].first];
  // x[i] is X for u = e_i: column j of x[i] equals column i of w[j].
  Mats x(c, ExactMatrix(c, c));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t row = 0; row < c; ++row) x[i](row, j) = w[j](row, i);

  EchelonBasis conditions(c);
  for (const auto& sk : s) {
    Mats z;
    z.reserve(c);
    for (std::size_t i = 0; i < c; ++i) z.push_back(sk * x[i] - x[i] * sk);
    for (std::size_t p = 0; p < c; ++p)
      for (std::size_t q = 0; q < c; ++q) {
        Vector row(c);
        bool any = false;
        for (std::size_t i = 0; i < c; ++i) {
          row[i] = z[i](p, q);
          any = any || !row[i].is_zero();
        }
        if (any) conditions.insert(row);
        if (conditions.dim() + 1 == c) return true;
      }
  }
  return false;
}

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = Scalar(1);
  return v;
}

Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> pick(-3, 3);
  Vector v(n);
  for (auto& x : v) x = Scalar(pick(rng));
  return v;
}

std::vector<Vector> candidates(const Mats& r, std::size_t n, std::mt19937_64& rng) {
  std::vector<Vector> out = detail::common_kernel(r, n);
  if (out.size() == n) return out;

  std::vector<Vector> whole;
  for (std::size_t i = 0; i < n; ++i) whole.push_back(unit(n, i));
  auto pieces = detail::joint_eigenspaces(r, whole);
  std::stable_sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (const auto& p : pieces)
    if (p.size() < n)
      for (const auto& v : p) out.push_back(v);

  // Greedy common kernel of as many matrices as possible.
  std::vector<Vector> kernel = whole;
  for (const auto& m : r) {
    ExactMatrix img(n, kernel.size());
    for (std::size_t j = 0; j < kernel.size(); ++j) {
      Vector u = m.apply(kernel[j]);
      for (std::size_t i = 0; i < n; ++i) img(i, j) = u[i];
    }
    std::vector<Vector> null = exactlin::nullspace(img);
    if (null.empty()) continue;
    std::vector<Vector> next;
    for (const auto& a : null) next.push_back(detail::combine(kernel, a));
    kernel = std::move(next);
  }
  if (kernel.size() < n)
    for (const auto& v : kernel) out.push_back(v);

  for (auto& v : whole) out.push_back(std::move(v));
  for (int i = 0; i < 4; ++i) out.push_back(random_vector(rng, n));
  return out;
}

// Basis (local coordinates) of an irreducible submodule of F^n.
std::vector<Vector> find_irreducible(const Mats& r, std::size_t n, std::mt19937_64& rng) {
  if (n == 1) return {unit(1, 0)};
  std::optional<Krylov> best;
  bool whole_tested = false;
  for (const auto& v : candidates(r, n, rng)) {
    if (exactlin::is_zero(v)) continue;
    Krylov k = krylov(r, v);
    if (k.vecs.size() == n) {
      if (whole_tested) continue;
      whole_tested = true;
    }
    if (!best || k.vecs.size() < best->vecs.size()) best = k;
    if (cyclic_commutant_is_scalar(r, k)) return k.vecs;
  }
  if (!best || best->vecs.size() == n)
    throw SplittingFailure("decompose_module: no proper invariant subspace found in a reducible module");
  Mats s = restricted_matrices(r, best->vecs);
  std::vector<Vector> inner = find_irreducible(s, best->vecs.size(), rng);
  std::vector<Vector> out;
  for (const auto& a : inner) out.push_back(detail::combine(best->vecs, a));
  return out;
}

struct Split {
  std::vector<Vector> sub;         // reduced basis of the irreducible piece
  std::vector<Vector> complement;  // invariant complement
  Mats complement_action;          // action on the complement in its basis
};

// Solves A_k Pi - Pi D_k = -B_k, where in the basis (sub | unit vectors off
// the pivots) each matrix is block upper triangular [[A_k, B_k], [0, D_k]].
Split complement_of(const Mats& r, std::size_t n, const std::vector<Vector>& sub_local) {
  Subspace u = Subspace::span(sub_local, n);
  const auto& ub = u.basis();
  const auto& piv = u.pivots();
  const std::size_t c = ub.size();
  const std::size_t y = n - c;
  std::vector<std::size_t> free_cols;
  {
    std::vector<bool> is_pivot(n, false);
    for (auto p : piv) is_pivot[p] = true;
    for (std::size_t j = 0; j < n; ++j)
      if (!is_pivot[j]) free_cols.push_back(j);
  }
  // Coordinates of w against (ub | e_free).
  auto coords = [&](const Vector& w, Vector& a, Vector& b) {
    a.assign(c, Scalar());
    b.assign(y, Scalar());
    for (std::size_t i = 0; i < c; ++i) a[i] = w[piv[i]];
    for (std::size_t j = 0; j < y; ++j) {
      Scalar v = w[free_cols[j]];
      for (std::size_t i = 0; i < c; ++i) exactlin::sub_mul(v, a[i], ub[i][free_cols[j]]);
      b[j] = std::move(v);
    }
  };

  Mats as, bs, ds;
  for (const auto& m : r) {
    ExactMatrix a(c, c), b(c, y), d(y, y);
    Vector ca, cb;
    for (std::size_t i = 0; i < c; ++i) {
      coords(m.apply(ub[i]), ca, cb);
      if (!exactlin::is_zero(cb)) throw SplittingFailure("decompose_module: component is not invariant");
      for (std::size_t p = 0; p < c; ++p) a(p, i) = ca[p];
    }
    for (std::size_t j = 0; j < y; ++j) {
      coords(m.apply(unit(n, free_cols[j])), ca, cb);
      for (std::size_t p = 0; p < c; ++p) b(p, j) = ca[p];
      for (std::size_t p = 0; p < y; ++p) d(p, j) = cb[p];
    }
    as.push_back(std::move(a));
    bs.push_back(std::move(b));
    ds.push_back(std::move(d));
  }

  const std::size_t unknowns = c * y;
  auto idx = [y](std::size_t a, std::size_t b) { return a * y + b; };
  EchelonBasis eq(unknowns + 1);
  for (std::size_t k = 0; k < r.size() && eq.dim() < unknowns; ++k)
    for (std::size_t a = 0; a < c && eq.dim() < unknowns; ++a)
      for (std::size_t b = 0; b < y && eq.dim() < unknowns; ++b) {
        Vector row(unknowns + 1);
        bool any = false;
        for (std::size_t t = 0; t < c; ++t)
          if (!as[k](a, t).is_zero()) {
            row[idx(t, b)] += as[k](a, t);
            any = true;
          }
        for (std::size_t s = 0; s < y; ++s)
          if (!ds[k](s, b).is_zero()) {
            row[idx(a, s)] -= ds[k](s, b);
            any = true;
          }
        row[unknowns] = -bs[k](a, b);
        if (!any && row[unknowns].is_zero()) continue;
        eq.insert(row);
      }
  Vector pi(unknowns);
  auto rows = eq.sorted_rows();
  auto pivs = eq.sorted_pivots();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (pivs[i] == unknowns) throw SplittingFailure("decompose_module: no invariant complement (module not completely reducible)");
    pi[pivs[i]] = rows[i][unknowns];
  }

  Split out;
  out.sub = ub;
  for (std::size_t j = 0; j < y; ++j) {
    Vector z = unit(n, free_cols[j]);
    for (std::size_t a = 0; a < c; ++a) {
      const Scalar& f = pi[idx(a, j)];
      if (f.is_zero()) continue;
      for (std::size_t q = 0; q < n; ++q)
        if (!ub[a][q].is_zero()) z[q] += f * ub[a][q];
    }
    out.complement.push_back(std::move(z));
  }
  out.complement_action = std::move(ds);
  return out;
}

void split_recursive(const Mats& r, const std::vector<Vector>& frame, std::mt19937_64& rng,
                     std::vector<ModuleComponent>& out) {
  const std::size_t n = frame.size();
  if (n == 0) return;
  std::vector<Vector> sub = find_irreducible(r, n, rng);
  if (sub.size() == n) {
    ModuleComponent c;
    c.basis = frame;
    c.subspace = Subspace::span(c.basis, frame.front().size());
    out.push_back(std::move(c));
    return;
  }
  Split s = complement_of(r, n, sub);
  ModuleComponent c;
  for (const auto& v : s.sub) c.basis.push_back(detail::combine(frame, v));
  c.subspace = Subspace::span(c.basis, frame.front().size());
  out.push_back(std::move(c));
  std::vector<Vector> next_frame;
  for (const auto& v : s.complement) next_frame.push_back(detail::combine(frame, v));
  split_recursive(s.complement_action, next_frame, rng, out);
}

}  // namespace

std::vector<ModuleComponent> decompose_module(const ModuleAction& m, std::uint64_t seed) {
  std::vector<ModuleComponent> out;
  if (m.dim == 0) return out;
  std::mt19937_64 rng(seed);
  std::vector<Vector> frame;
  for (std::size_t i = 0; i < m.dim; ++i) frame.push_back(unit(m.dim, i));
  split_recursive(m.matrices, frame, rng, out);
  return out;
}

std::size_t envelope_dimension(const std::vector<ExactMatrix>& matrices, std::size_t dim) {
  if (dim == 0) return 0;
  EchelonBasis gens_span(dim * dim);
  Mats gens;
  for (const auto& m : matrices)
    if (gens_span.insert(m.vectorize())) gens.push_back(m);
  EchelonBasis env(dim * dim);
  Mats words{ExactMatrix::identity(dim)};
  env.insert(words.front().vectorize());
  for (std::size_t i = 0; i < words.size() && env.dim() < dim * dim; ++i)
    for (const auto& g : gens) {
      ExactMatrix p = g * words[i];
      if (env.insert(p.vectorize())) words.push_back(std::move(p));
      if (env.dim() == dim * dim) break;
    }
  return env.dim();
}

bool burnside_irreducible(const std::vector<ExactMatrix>& matrices, std::size_t dim) {
  return dim >= 1 && envelope_dimension(matrices, dim) == dim * dim;
}

bool burnside_irreducible(const ModuleAction& m) { return burnside_irreducible(m.matrices, m.dim); }

Subspace invariant_closure(const std::vector<ExactMatrix>& matrices, const Vector& v) {
  Krylov k = krylov(matrices, v);
  return Subspace::span(k.vecs, v.size());
}

bool is_invariant(const std::vector<ExactMatrix>& matrices, const std::vector<Vector>& basis) {
  if (basis.empty()) return true;
  Subspace s = Subspace::span(basis, basis.front().size());
  for (const auto& m : matrices)
    for (const auto& b : basis)
      if (!s.contains(m.apply(b))) return false;
  return true;
}

ModuleType classify_type(const ModuleComponent& c, const std::vector<ExactMatrix>& i1,
                         const std::vector<ExactMatrix>& i2, const std::vector<ExactMatrix>& rest) {
  auto acts_trivially = [&](const std::vector<ExactMatrix>& ms) {
    for (const auto& m : ms)
      for (const auto& b : c.basis)
        if (!exactlin::is_zero(m.apply(b))) return false;
    return true;
  };
  const bool t1 = acts_trivially(i1);
  const bool t2 = acts_trivially(i2);
  if (t1 && t2) return acts_trivially(rest) ? ModuleType::type1 : ModuleType::unclassified;
  if (!t1 && t2) return ModuleType::type2;
  if (t1 && !t2) return ModuleType::type3;
  return ModuleType::type4;
}

ProjectionView projection_view(const std::vector<GradedMatrix>& odd_elements, const std::vector<ModuleComponent>& v_parts,
                               const std::vector<ModuleComponent>& w_parts, std::size_t i, std::size_t j) {
  if (i >= v_parts.size() || j >= w_parts.size()) throw std::out_of_range("projection_view: component index");
  ProjectionView view{i, j, {}};
  std::vector<Vector> all_w;
  std::size_t offset = 0;
  for (std::size_t q = 0; q < w_parts.size(); ++q) {
    if (q == j) offset = all_w.size();
    for (const auto& b : w_parts[q].basis) all_w.push_back(b);
  }
  if (all_w.empty()) throw std::invalid_argument("projection_view: empty W decomposition");
  CoordinateSystem cs(all_w, all_w.front().size());
  const auto& vb = v_parts[i].basis;
  const auto& wb = w_parts[j].basis;
  for (const auto& x : odd_elements) {
    const std::size_t m = x.sizes().even;
    const std::size_t n2 = x.sizes().odd;
    ExactMatrix lower = x.entries().block(m, 0, n2, m);
    ExactMatrix pm(wb.size(), vb.size());
    for (std::size_t col = 0; col < vb.size(); ++col) {
      Vector coords = cs.coordinates_or_throw(lower.apply(vb[col]));
      for (std::size_t row = 0; row < wb.size(); ++row) pm(row, col) = coords[offset + row];
    }
    view.matrices.push_back(std::move(pm));
  }
  return view;
}

}  // namespace ospd::repmod
