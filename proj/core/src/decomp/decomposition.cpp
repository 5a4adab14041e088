#include "ospd/decomp/decomposition.hpp"

#include "ospd/superalg/constructors.hpp"

#include <stdexcept>

namespace ospd::decomp {

using exactlin::Scalar;
using superalg::AlgebraLabel;
using superalg::BlockSizes;
using superalg::GradedMatrix;
using superalg::NamedIdeal;
using superalg::OrthoForm;
using superalg::Parity;

namespace {

ExactMatrix e(std::size_t d, std::size_t i, std::size_t j) { return ExactMatrix::unit(d, d, i, j); }

long as_param(std::size_t v) { return static_cast<long>(v); }

Superalgebra ordinary(AlgebraLabel label, const std::vector<ExactMatrix>& mats) {
  const BlockSizes sizes{mats.front().rows(), 0};
  std::vector<GradedMatrix> basis;
  for (const auto& x : mats) basis.emplace_back(sizes, x, Parity::even);
  return {std::move(label), sizes, std::move(basis)};
}

// The o(2h-1) stabilizing e_0 + e_h inside split o(2h): row/column 0 and h are tied
// together by the x, y parameters; the rest is o(2h-2) in split form.
std::vector<ExactMatrix> stabilizer_basis(std::size_t h) {
  const std::size_t d = 2 * h;
  std::vector<ExactMatrix> out;
  for (std::size_t j = 1; j < h; ++j) {
    out.push_back(e(d, 0, h + j) + e(d, j, 0) - e(d, j, h) - e(d, h, h + j));  // x_j
    out.push_back(e(d, 0, j) - e(d, h, j) + e(d, h + j, 0) - e(d, h + j, h));  // y_j
  }
  for (std::size_t a = 1; a < h; ++a)
    for (std::size_t b = 1; b < h; ++b) out.push_back(e(d, a, b) - e(d, h + b, h + a));
  for (std::size_t a = 1; a < h; ++a)
    for (std::size_t b = a + 1; b < h; ++b) {
      out.push_back(e(d, a, h + b) - e(d, b, h + a));
      out.push_back(e(d, h + a, b) - e(d, h + b, a));
    }
  return out;
}

ExactMatrix doubled(const ExactMatrix& y) { return exactlin::block_diagonal(y, -y.transpose()); }

Superalgebra conjugated(const Superalgebra& a, const ExactMatrix& t, const ExactMatrix& t_inv, AlgebraLabel label) {
  auto map = [&](const std::vector<GradedMatrix>& xs) {
    std::vector<GradedMatrix> out;
    for (const auto& x : xs) out.emplace_back(a.sizes(), t * x.entries() * t_inv, x.parity());
    return out;
  };
  std::vector<NamedIdeal> ideals;
  for (const auto& i : a.ideals()) ideals.push_back({i.name, map(i.basis)});
  Superalgebra out(std::move(label), a.sizes(), map(a.basis()), std::move(ideals));
  const ExactMatrix prior = a.conjugation() ? *a.conjugation() : ExactMatrix::identity(a.sizes().total());
  return out.with_conjugation(t * prior);
}

void check_phi_sizes(const Superalgebra& a, std::size_t k, std::size_t n) {
  if (k < 1) throw std::invalid_argument("phi: k must be >= 1");
  if (!(a.sizes() == BlockSizes{2 * k, 2 * n}))
    throw std::invalid_argument("phi: algebra " + a.label().str() + " does not have block sizes (2k, 2n)");
}

}  // namespace

OnishchikDecomposition onishchik_o_even(std::size_t k) {
  if (k < 2) throw std::invalid_argument("onishchik_o_even: need k >= 2");
  OnishchikDecomposition out;
  out.s = superalg::build_o(2 * k, OrthoForm::split);
  out.n = ordinary({"o", {as_param(2 * k - 1)}, std::nullopt}, stabilizer_basis(k));
  std::vector<ExactMatrix> m;
  for (const auto& y : superalg::traceless_basis(k)) m.push_back(doubled(y));
  out.m = ordinary({"sl", {as_param(k)}, std::nullopt}, m);
  return out;
}

OnishchikDecomposition onishchik_o_4k(std::size_t k) {
  if (k < 1) throw std::invalid_argument("onishchik_o_4k: need k >= 1");
  OnishchikDecomposition out;
  out.s = superalg::build_o(4 * k, OrthoForm::split);
  out.n = ordinary({"o", {as_param(4 * k - 1)}, std::nullopt}, stabilizer_basis(2 * k));
  const Superalgebra sp = superalg::build_sp(k);
  std::vector<ExactMatrix> m;
  for (const auto& y : sp.basis()) m.push_back(doubled(y.entries()));
  out.m = ordinary({"sp", {as_param(2 * k)}, std::nullopt}, m);
  return out;
}

ExactMatrix q_matrix(std::size_t k) {
  ExactMatrix q(2 * k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    q(i, i) = Scalar(1);
    q(i, k + i) = Scalar(1);
    q(k + i, i) = Scalar::i();
    q(k + i, k + i) = -Scalar::i();
  }
  return q;
}

ExactMatrix q_bar(std::size_t k, std::size_t n) {
  if (n == 0) return q_matrix(k);
  return exactlin::block_diagonal(q_matrix(k), ExactMatrix::identity(2 * n));
}

namespace {

ExactMatrix q_bar_inverse(std::size_t k, std::size_t n) {
  // Q^{-1} = 1/2 [[I, -iI], [I, iI]].
  const Scalar half = Scalar(1) / Scalar(2);
  ExactMatrix q(2 * k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    q(i, i) = half;
    q(i, k + i) = -half * Scalar::i();
    q(k + i, i) = half;
    q(k + i, k + i) = half * Scalar::i();
  }
  if (n == 0) return q;
  return exactlin::block_diagonal(q, ExactMatrix::identity(2 * n));
}

}  // namespace

Superalgebra phi_conjugate(const Superalgebra& a, std::size_t k, std::size_t n) {
  check_phi_sizes(a, k, n);
  AlgebraLabel label = a.label();
  label.form = label.form == OrthoForm::split ? std::optional{OrthoForm::identity} : std::nullopt;
  return conjugated(a, q_bar(k, n), q_bar_inverse(k, n), std::move(label));
}

Superalgebra phi_inverse_conjugate(const Superalgebra& a, std::size_t k, std::size_t n) {
  check_phi_sizes(a, k, n);
  AlgebraLabel label = a.label();
  label.form = label.form == OrthoForm::identity ? std::optional{OrthoForm::split} : std::nullopt;
  return conjugated(a, q_bar_inverse(k, n), q_bar(k, n), std::move(label));
}

ExactMatrix example_conjugation(std::size_t k, std::size_t n) {
  ExactMatrix w = ExactMatrix::identity(2 * n);
  for (std::size_t i = n; i < 2 * n; ++i) w(i, i) = Scalar(2);
  return exactlin::block_diagonal(q_matrix(k), w);
}

ExactMatrix example_embed(const ExactMatrix& z, std::size_t k, std::size_t n) {
  if (z.rows() != k + n || z.cols() != k + n) throw std::invalid_argument("example_embed: expected a (k+n)-square matrix");
  const ExactMatrix x = z.block(0, 0, k, k);
  const ExactMatrix p = z.block(0, k, k, n);
  const ExactMatrix q = z.block(k, 0, n, k);
  const ExactMatrix y = z.block(k, k, n, n);
  const std::size_t t = 2 * k + 2 * n;
  ExactMatrix out(t, t);
  out.set_block(0, 0, x);
  out.set_block(k, k, -x.transpose());
  out.set_block(2 * k, 2 * k, y);
  out.set_block(2 * k + n, 2 * k + n, -y.transpose());
  out.set_block(0, 2 * k, p);
  out.set_block(k, 2 * k + n, q.transpose());
  out.set_block(2 * k, 0, q);
  out.set_block(2 * k + n, k, -p.transpose());
  // T = diag(Q, I_n, 2 I_n); T^{-1} written out to stay exact without a solve.
  ExactMatrix t_inv = q_bar_inverse(k, n);
  for (std::size_t i = 2 * k + n; i < t; ++i) t_inv(i, i) = Scalar(1) / Scalar(2);
  return example_conjugation(k, n) * out * t_inv;
}

ExampleDecomposition build_example_decomposition(std::size_t k, std::size_t n) {
  if (k < 2 || n < 1) throw std::invalid_argument("build_example_decomposition: need k >= 2 and n >= 1");
  if (k == n) throw std::invalid_argument("build_example_decomposition: k = n rejected: sl(n,n) is not basic simple");
  ExampleDecomposition out;
  out.s = superalg::build_osp(2 * k, n);
  const BlockSizes sizes = out.s.sizes();
  const std::size_t t = sizes.total();

  // K: osp(2k-1, 2n) on the coordinates 1 .. t-1.
  const Superalgebra inner = superalg::build_osp(2 * k - 1, n);
  auto shift = [&](const std::vector<GradedMatrix>& xs) {
    std::vector<GradedMatrix> mapped;
    for (const auto& x : xs) {
      ExactMatrix big(t, t);
      big.set_block(1, 1, x.entries());
      mapped.emplace_back(sizes, std::move(big), x.parity());
    }
    return mapped;
  };
  std::vector<NamedIdeal> k_ideals;
  for (const auto& i : inner.ideals()) k_ideals.push_back({i.name, shift(i.basis)});
  out.k = Superalgebra({"osp", {as_param(2 * k - 1), as_param(2 * n)}, OrthoForm::identity}, sizes, shift(inner.basis()),
                       std::move(k_ideals));

  // L: the sl(k|n) standard basis carried through example_embed.
  const Superalgebra standard = superalg::build_sl(k, n);
  auto embed = [&](const std::vector<GradedMatrix>& xs) {
    std::vector<GradedMatrix> mapped;
    for (const auto& x : xs) mapped.emplace_back(sizes, example_embed(x.entries(), k, n), x.parity());
    return mapped;
  };
  std::vector<NamedIdeal> l_ideals;
  for (const auto& i : standard.ideals()) l_ideals.push_back({i.name, embed(i.basis)});
  out.l = Superalgebra({"sl", {as_param(k), as_param(n)}, std::nullopt}, sizes, embed(standard.basis()),
                       std::move(l_ideals))
              .with_conjugation(example_conjugation(k, n));
  return out;
}

repmod::WeightFrame example_frame_i1(std::size_t k, std::size_t n) {
  return repmod::sl_frame(k).mapped([k, n](const ExactMatrix& x) {
    ExactMatrix z(k + n, k + n);
    z.set_block(0, 0, x);
    return example_embed(z, k, n);
  });
}

repmod::WeightFrame example_frame_i2(std::size_t k, std::size_t n) {
  return repmod::sl_frame(n).mapped([k, n](const ExactMatrix& y) {
    ExactMatrix z(k + n, k + n);
    z.set_block(k, k, y);
    return example_embed(z, k, n);
  });
}

}  // namespace ospd::decomp
