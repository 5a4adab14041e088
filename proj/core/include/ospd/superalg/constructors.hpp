#pragma once

#include "ospd/superalg/superalgebra.hpp"

namespace ospd::superalg {

// All matrix units of gl(m | two_n); two_n must be even and >= 2.
Superalgebra build_gl(std::size_t m, std::size_t two_n);

// Supertrace-zero matrices in gl(m | n), m != n. Attached ideals:
//   I1 = sl(m) on the first block, I2 = sl(n) on the second block,
//   U  = span{diag(n I_m, m I_n)}, the one-dimensional center of the even part.
// I1 or I2 is empty when the corresponding block has size 1.
Superalgebra build_sl(std::size_t m, std::size_t n);

// osp(m, 2n): block sizes (m, 2n), preserving the ortho form J on the first
// block and G on the second. Even part: A = J K (K skew) and D = G S
// (S symmetric). Odd part: [[0, B], [C, 0]] with C = G B^t J.
// Attached ideals: I1 = o(m) part, I2 = sp(2n) part.
Superalgebra build_osp(std::size_t m, std::size_t n, OrthoForm form = OrthoForm::identity);

// Ordinary Lie algebras, block sizes (d, 0).
Superalgebra build_o(std::size_t m, OrthoForm form = OrthoForm::identity);
Superalgebra build_sp(std::size_t n);  // sp(2n) with the form G
Superalgebra build_sl_classical(std::size_t k);

// Ambient-size helpers shared by the decompositions.
std::vector<ExactMatrix> skew_basis(std::size_t m);
std::vector<ExactMatrix> symmetric_basis(std::size_t m);
std::vector<ExactMatrix> traceless_basis(std::size_t m);

// Embeds a d x d matrix into the even part with block sizes `sizes`, at
// offset `at` on the diagonal.
GradedMatrix embed_even(BlockSizes sizes, std::size_t at, const ExactMatrix& block);

}  // namespace ospd::superalg
