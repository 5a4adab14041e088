#include "spectral.hpp"

#include <cmath>
#include <set>
#include <utility>

namespace ospd::repmod::detail {

using exactlin::Rational;

std::vector<Scalar> char_poly(const ExactMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = Scalar(1);
  ExactMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k) / k
    ExactMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    Scalar tr = (a * m).trace();
    c[n - k] = -tr / Scalar(static_cast<long long>(k));
  }
  return c;
}

namespace {

mpz_class entry_denominator_lcm(const ExactMatrix& a) {
  mpz_class l = 1;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (const Rational* part : {&a(i, j).re(), &a(i, j).im()}) {
        if (part->is_integer()) continue;
        mpz_class d = part->to_mpq().get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      }
  return l;
}

double to_double(const Rational& r) { return r.is_zero() ? 0.0 : r.to_mpq().get_d(); }

Scalar horner(const std::vector<Scalar>& c, const Scalar& x) {
  Scalar acc;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

}  // namespace

std::vector<Scalar> rational_eigenvalues(const ExactMatrix& a0, std::size_t max_points) {
  const std::size_t n = a0.rows();
  if (n == 0) return {};
  const mpz_class l = entry_denominator_lcm(a0);
  const Scalar scale{Rational(mpq_class(l))};
  const ExactMatrix a = a0 * scale;

  struct Disc {
    double re, im, radius;
  };
  std::vector<Disc> discs;
  std::size_t points = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) r += std::abs(to_double(a(i, j).re())) + std::abs(to_double(a(i, j).im()));
    discs.push_back({to_double(a(i, i).re()), to_double(a(i, i).im()), r});
    points += static_cast<std::size_t>((2 * r + 3) * (2 * r + 3));
    if (points > max_points) return {};
  }

  std::vector<Scalar> cp = char_poly(a);
  std::vector<Scalar> out;
  std::set<std::pair<long long, long long>> seen;
  for (const Disc& d : discs) {
    const long long r0 = static_cast<long long>(std::floor(d.re - d.radius - 1e-9));
    const long long r1 = static_cast<long long>(std::ceil(d.re + d.radius + 1e-9));
    const long long i0 = static_cast<long long>(std::floor(d.im - d.radius - 1e-9));
    const long long i1 = static_cast<long long>(std::ceil(d.im + d.radius + 1e-9));
    for (long long x = r0; x <= r1; ++x)
      for (long long y = i0; y <= i1; ++y) {
        const double dx = static_cast<double>(x) - d.re;
        const double dy = static_cast<double>(y) - d.im;
        if (dx * dx + dy * dy > d.radius * d.radius + 1e-6) continue;
        if (!seen.insert({x, y}).second) continue;
        Scalar lambda{Rational(x), Rational(y)};
        if (horner(cp, lambda).is_zero()) out.push_back(lambda / scale);
      }
  }
  return out;
}

std::vector<Vector> eigenspace(const ExactMatrix& a, const Scalar& lambda) {
  ExactMatrix s = a;
  for (std::size_t i = 0; i < s.rows(); ++i) s(i, i) -= lambda;
  return exactlin::nullspace(s);
}

bool is_scalar_matrix(const ExactMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i == j) {
        if (!(a(i, i) == a(0, 0))) return false;
      } else if (!a(i, j).is_zero()) {
        return false;
      }
    }
  return true;
}

Vector combine(const std::vector<Vector>& basis, const Vector& coords) {
  Vector out(basis.empty() ? 0 : basis.front().size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (coords[j].is_zero()) continue;
    for (std::size_t i = 0; i < out.size(); ++i)
      if (!basis[j][i].is_zero()) out[i] += coords[j] * basis[j][i];
  }
  return out;
}

std::vector<Vector> common_kernel(const std::vector<ExactMatrix>& mats, std::size_t dim) {
  exactlin::EchelonBasis rows(dim);
  for (const auto& m : mats) {
    for (std::size_t i = 0; i < m.rows() && rows.dim() < dim; ++i) rows.insert(m.row_vector(i));
    if (rows.dim() == dim) return {};
  }
  std::vector<Vector> r = rows.sorted_rows();
  std::vector<std::size_t> piv = rows.sorted_pivots();
  std::vector<bool> is_pivot(dim, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    Vector v(dim);
    v[f] = Scalar(1);
    for (std::size_t k = 0; k < r.size(); ++k) v[piv[k]] = -r[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Vector>> joint_eigenspaces(const std::vector<ExactMatrix>& mats,
                                                   const std::vector<Vector>& start) {
  if (start.empty()) return {};
  std::vector<std::vector<Vector>> pieces{start};
  std::vector<std::vector<Vector>> frozen;
  const std::size_t n = start.front().size();
  for (const auto& r : mats) {
    std::vector<std::vector<Vector>> next;
    for (auto& piece : pieces) {
      if (piece.size() <= 1) {
        next.push_back(std::move(piece));
        continue;
      }
      exactlin::CoordinateSystem cs(piece, n);
      ExactMatrix s(piece.size(), piece.size());
      bool invariant = true;
      for (std::size_t j = 0; j < piece.size() && invariant; ++j) {
        auto c = cs.coordinates(r.apply(piece[j]));
        if (!c) {
          invariant = false;
          break;
        }
        for (std::size_t i = 0; i < piece.size(); ++i) s(i, j) = (*c)[i];
      }
      if (!invariant || is_scalar_matrix(s)) {
        next.push_back(std::move(piece));
        continue;
      }
      std::vector<Scalar> eig = rational_eigenvalues(s);
      std::size_t covered = 0;
      std::vector<std::vector<Vector>> split;
      for (const auto& lambda : eig) {
        std::vector<Vector> local = eigenspace(s, lambda);
        std::vector<Vector> mapped;
        for (const auto& v : local) mapped.push_back(combine(piece, v));
        covered += mapped.size();
        split.push_back(std::move(mapped));
      }
      if (split.empty()) {
        next.push_back(std::move(piece));
        continue;
      }
      // A defective or partly irrational spectrum leaves a remainder: keep
      // refining the whole piece and set the partial eigenspaces aside.
      if (covered < piece.size()) {
        for (auto& sp : split) frozen.push_back(std::move(sp));
        next.push_back(std::move(piece));
      } else {
        for (auto& sp : split) next.push_back(std::move(sp));
      }
    }
    pieces = std::move(next);
  }
  for (auto& f : frozen) pieces.push_back(std::move(f));
  return pieces;
}

}  // namespace ospd::repmod::detail
