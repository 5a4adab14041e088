#include "ospd/superalg/constructors.hpp"

#include <stdexcept>

namespace ospd::superalg {

std::vector<ExactMatrix> skew_basis(std::size_t m) {
  std::vector<ExactMatrix> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      out.push_back(ExactMatrix::unit(m, m, i, j) - ExactMatrix::unit(m, m, j, i));
  return out;
}

std::vector<ExactMatrix> symmetric_basis(std::size_t m) {
  std::vector<ExactMatrix> out;
  for (std::size_t i = 0; i < m; ++i) {
    out.push_back(ExactMatrix::unit(m, m, i, i));
    for (std::size_t j = i + 1; j < m; ++j)
      out.push_back(ExactMatrix::unit(m, m, i, j) + ExactMatrix::unit(m, m, j, i));
  }
  return out;
}

std::vector<ExactMatrix> traceless_basis(std::size_t m) {
  std::vector<ExactMatrix> out;
  for (std::size_t i = 0; i + 1 < m; ++i)
    out.push_back(ExactMatrix::unit(m, m, i, i) - ExactMatrix::unit(m, m, i + 1, i + 1));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) out.push_back(ExactMatrix::unit(m, m, i, j));
  return out;
}

GradedMatrix embed_even(BlockSizes sizes, std::size_t at, const ExactMatrix& block) {
  ExactMatrix e(sizes.total(), sizes.total());
  e.set_block(at, at, block);
  return {sizes, std::move(e), Parity::even};
}

Superalgebra build_gl(std::size_t m, std::size_t two_n) {
  if (m < 1) throw std::invalid_argument("build_gl: m must be >= 1");
  if (two_n < 2 || two_n % 2 != 0) throw std::invalid_argument("build_gl: second block size must be even and >= 2");
  const BlockSizes sizes{m, two_n};
  const std::size_t t = sizes.total();
  std::vector<GradedMatrix> basis;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) basis.push_back(GradedMatrix::make(sizes, ExactMatrix::unit(t, t, i, j)));
  return {{"gl", {static_cast<long>(m), static_cast<long>(two_n)}, std::nullopt}, sizes, std::move(basis)};
}

Superalgebra build_sl(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("build_sl: block sizes must be >= 1");
  if (m == n)
    throw std::invalid_argument("build_sl: m = n rejected: sl(n,n) is not basic simple here; a central U appears");
  const BlockSizes sizes{m, n};
  const std::size_t t = m + n;
  NamedIdeal i1{"I1", {}};
  NamedIdeal i2{"I2", {}};
  for (const auto& x : traceless_basis(m)) i1.basis.push_back(embed_even(sizes, 0, x));
  for (const auto& x : traceless_basis(n)) i2.basis.push_back(embed_even(sizes, m, x));
  ExactMatrix z(t, t);
  for (std::size_t i = 0; i < m; ++i) z(i, i) = Scalar(static_cast<long long>(n));
  for (std::size_t i = 0; i < n; ++i) z(m + i, m + i) = Scalar(static_cast<long long>(m));
  NamedIdeal u{"U", {GradedMatrix(sizes, z, Parity::even)}};

  std::vector<GradedMatrix> basis = i1.basis;
  basis.insert(basis.end(), i2.basis.begin(), i2.basis.end());
  basis.push_back(u.basis.front());
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      if ((i < m) != (j < m)) basis.push_back(GradedMatrix(sizes, ExactMatrix::unit(t, t, i, j), Parity::odd));
  return {{"sl", {static_cast<long>(m), static_cast<long>(n)}, std::nullopt},
          sizes,
          std::move(basis),
          {std::move(i1), std::move(i2), std::move(u)}};
}

namespace {

std::vector<ExactMatrix> ortho_part(std::size_t m, OrthoForm form) {
  const ExactMatrix j = BilinearFormSpec::ortho_gram(m, form);
  std::vector<ExactMatrix> out;
  for (const auto& k : skew_basis(m)) out.push_back(j * k);
  return out;
}

std::vector<ExactMatrix> symplectic_part(std::size_t n) {
  const ExactMatrix g = BilinearFormSpec::symplectic_gram(n);
  std::vector<ExactMatrix> out;
  for (const auto& s : symmetric_basis(2 * n)) out.push_back(g * s);
  return out;
}

}  // namespace

Superalgebra build_osp(std::size_t m, std::size_t n, OrthoForm form) {
  if (m < 2 || n < 1) throw std::invalid_argument("build_osp: need m >= 2 and n >= 1");
  const BlockSizes sizes{m, 2 * n};
  const std::size_t t = sizes.total();
  NamedIdeal i1{"I1", {}};
  NamedIdeal i2{"I2", {}};
  for (const auto& a : ortho_part(m, form)) i1.basis.push_back(embed_even(sizes, 0, a));
  for (const auto& d : symplectic_part(n)) i2.basis.push_back(embed_even(sizes, m, d));

  std::vector<GradedMatrix> basis = i1.basis;
  basis.insert(basis.end(), i2.basis.begin(), i2.basis.end());
  const ExactMatrix j = BilinearFormSpec::ortho_gram(m, form);
  const ExactMatrix g = BilinearFormSpec::symplectic_gram(n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < 2 * n; ++c) {
      ExactMatrix b = ExactMatrix::unit(m, 2 * n, r, c);
      ExactMatrix x(t, t);
      x.set_block(0, m, b);
      x.set_block(m, 0, g * b.transpose() * j);
      basis.emplace_back(sizes, std::move(x), Parity::odd);
    }
  return {{"osp", {static_cast<long>(m), static_cast<long>(2 * n)}, form},
          sizes,
          std::move(basis),
          {std::move(i1), std::move(i2)}};
}

Superalgebra build_o(std::size_t m, OrthoForm form) {
  if (m < 2) throw std::invalid_argument("build_o: need m >= 2");
  const BlockSizes sizes{m, 0};
  std::vector<GradedMatrix> basis;
  for (const auto& a : ortho_part(m, form)) basis.emplace_back(sizes, a, Parity::even);
  return {{"o", {static_cast<long>(m)}, form}, sizes, std::move(basis)};
}

Superalgebra build_sp(std::size_t n) {
  if (n < 1) throw std::invalid_argument("build_sp: need n >= 1");
  const BlockSizes sizes{2 * n, 0};
  std::vector<GradedMatrix> basis;
  for (const auto& d : symplectic_part(n)) basis.emplace_back(sizes, d, Parity::even);
  return {{"sp", {static_cast<long>(2 * n)}, std::nullopt}, sizes, std::move(basis)};
}

Superalgebra build_sl_classical(std::size_t k) {
  if (k < 2) throw std::invalid_argument("build_sl_classical: need k >= 2");
  const BlockSizes sizes{k, 0};
  std::vector<GradedMatrix> basis;
  for (const auto& x : traceless_basis(k)) basis.emplace_back(sizes, x, Parity::even);
  return {{"sl", {static_cast<long>(k)}, std::nullopt}, sizes, std::move(basis)};
}

}  // namespace ospd::superalg
