#pragma once

#include "ospd/exactlin/matrix.hpp"

#include <stdexcept>
#include <string>

namespace ospd::superalg {

using exactlin::ExactMatrix;
using exactlin::Scalar;
using exactlin::Vector;

enum class Parity { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}
std::string to_string(Parity p);

// Sizes of the even (first) and odd (second) coordinate blocks. For
// osp(m,2n) these are (m, 2n); for sl(m,n) they are (m, n); ordinary Lie
// algebras use (d, 0).
struct BlockSizes {
  std::size_t even = 0;
  std::size_t odd = 0;
  std::size_t total() const { return even + odd; }
  friend bool operator==(const BlockSizes&, const BlockSizes&) = default;
};

class NonHomogeneousError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Block matrix of size (even+odd)^2 with a parity tag. Even elements have
// zero off-diagonal blocks; odd elements have zero diagonal blocks.
class GradedMatrix {
 public:
  GradedMatrix() = default;
  // Throws NonHomogeneousError when the block pattern contradicts parity.
  GradedMatrix(BlockSizes sizes, ExactMatrix entries, Parity parity);
  // Infers the parity; the zero matrix is tagged even.
  static GradedMatrix make(BlockSizes sizes, ExactMatrix entries);
  static bool has_parity(BlockSizes sizes, const ExactMatrix& m, Parity p);

  BlockSizes sizes() const { return sizes_; }
  const ExactMatrix& entries() const { return entries_; }
  Parity parity() const { return parity_; }
  const Vector& vectorize() const { return entries_.vectorize(); }

  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
    return a.sizes_ == b.sizes_ && a.parity_ == b.parity_ && a.entries_ == b.entries_;
  }

 private:
  BlockSizes sizes_;
  ExactMatrix entries_;
  Parity parity_ = Parity::even;
};

// [x,y] = xy - (-1)^{|x||y|} yx.
GradedMatrix superbracket(const GradedMatrix& x, const GradedMatrix& y);

// The even/odd diagonal block of an even element.
ExactMatrix even_block(const GradedMatrix& x);
ExactMatrix odd_block(const GradedMatrix& x);

}  // namespace ospd::superalg
