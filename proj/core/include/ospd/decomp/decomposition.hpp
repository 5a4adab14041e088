#pragma once

#include "ospd/repmod/weights.hpp"
#include "ospd/superalg/superalgebra.hpp"

#include <cstddef>

namespace ospd::decomp {

using exactlin::ExactMatrix;
using superalg::Superalgebra;

// S = N + M inside an orthogonal algebra in split form.
struct OnishchikDecomposition {
  Superalgebra s;
  Superalgebra n;
  Superalgebra m;
};

// o(2k) = o(2k-1) + sl(k), k >= 2. S is o(2k) for the split form; N is the
// stabilizer of e_0 + e_k written out block by block; M = {diag(Y, -Y^t) : tr Y = 0}.
OnishchikDecomposition onishchik_o_even(std::size_t k);

// o(4k) = o(4k-1) + sp(2k), k >= 1. N as above at size 4k; M = {diag(Y, -Y^t)}
// with Y in sp(2k) for the form G.
OnishchikDecomposition onishchik_o_4k(std::size_t k);

// [[I, I], [iI, -iI]] of order 2k, without the 1/sqrt(2): scalars cancel in
// conjugation. It carries the split form to 2 * identity.
ExactMatrix q_matrix(std::size_t k);
// diag(q_matrix(k), I_{2n}).
ExactMatrix q_bar(std::size_t k, std::size_t n);

// X -> Qbar X Qbar^{-1} on every basis element and ideal; requires block
// sizes (2k, 2n) (n = 0 for ordinary algebras). A split-form label becomes
// identity-form. The recorded conjugation is composed with Qbar.
Superalgebra phi_conjugate(const Superalgebra& a, std::size_t k, std::size_t n);
// X -> Qbar^{-1} X Qbar.
Superalgebra phi_inverse_conjugate(const Superalgebra& a, std::size_t k, std::size_t n);

struct ExampleDecomposition {
  Superalgebra s;  // osp(2k, 2n), identity form
  Superalgebra k;  // elements of S with zero first row and column
  Superalgebra l;  // sl(k, n) in the i-coupled block form
};

// The sum osp(2k,2n) = osp(2k-1,2n) + sl(k,n); k >= 2, n >= 1, k != n.
//
// L is T iota(sl(k|n)) T^{-1} where iota(Z) places Z and its negative
// supertranspose-like partner on the coordinate layout (k, k, n, n):
//   [[X, P], [Q, Y]] -> X (+) -X^t on V, Y (+) -Y^t on W, P and Q^t above,
//   Q and -P^t below; and T = diag(q_matrix(k), I_n, 2 I_n). Every element
// then has the shape
//   [[E, -F,  P,    Q^t  ],
//    [F,  E,  iP,  -iQ^t ],
//    [Q, -iQ, D,    0    ],
//    [-P^t, -iP^t, 0, -D^t]]
// with E skew, F symmetric, tr D = -i tr F. L records T as its conjugation and
// carries the ideals I1 = sl(k), I2 = sl(n), U.
ExampleDecomposition build_example_decomposition(std::size_t k, std::size_t n);

// iota of an sl(k|n)-sized matrix, followed by conjugation with T.
ExactMatrix example_embed(const ExactMatrix& z, std::size_t k, std::size_t n);
ExactMatrix example_conjugation(std::size_t k, std::size_t n);

// Weight frames of the ideals of the example's L: the standard sl(k) frame
// (I1) and sl(n) frame (I2), carried through example_embed. Empty frames when
// the ideal is zero.
repmod::WeightFrame example_frame_i1(std::size_t k, std::size_t n);
repmod::WeightFrame example_frame_i2(std::size_t k, std::size_t n);

}  // namespace ospd::decomp
