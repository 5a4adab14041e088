#include "ospd/superalg/graded_matrix.hpp"

namespace ospd::superalg {

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

bool GradedMatrix::has_parity(BlockSizes sizes, const ExactMatrix& m, Parity p) {
  const std::size_t n = sizes.total();
  if (m.rows() != n || m.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j).is_zero()) continue;
      const bool diagonal_block = (i < sizes.even) == (j < sizes.even);
      if (diagonal_block != (p == Parity::even)) return false;
    }
  return true;
}

GradedMatrix::GradedMatrix(BlockSizes sizes, ExactMatrix entries, Parity parity)
    : sizes_(sizes), entries_(std::move(entries)), parity_(parity) {
  if (entries_.rows() != sizes.total() || entries_.cols() != sizes.total())
    throw exactlin::DimensionError("GradedMatrix: entries do not match block sizes");
  if (!has_parity(sizes_, entries_, parity_))
    throw NonHomogeneousError("GradedMatrix: block pattern is not " + to_string(parity_));
}

GradedMatrix GradedMatrix::make(BlockSizes sizes, ExactMatrix entries) {
  if (has_parity(sizes, entries, Parity::even)) return {sizes, std::move(entries), Parity::even};
  if (has_parity(sizes, entries, Parity::odd)) return {sizes, std::move(entries), Parity::odd};
  if (entries.rows() != sizes.total() || entries.cols() != sizes.total())
    throw exactlin::DimensionError("GradedMatrix: entries do not match block sizes");
  throw NonHomogeneousError("GradedMatrix: matrix is not homogeneous");
}

GradedMatrix superbracket(const GradedMatrix& x, const GradedMatrix& y) {
  if (!(x.sizes() == y.sizes())) throw exactlin::DimensionError("superbracket: block sizes differ");
  ExactMatrix xy = x.entries() * y.entries();
  ExactMatrix yx = y.entries() * x.entries();
  const bool both_odd = x.parity() == Parity::odd && y.parity() == Parity::odd;
  ExactMatrix out = both_odd ? xy + yx : xy - yx;
  return {x.sizes(), std::move(out), x.parity() + y.parity()};
}

ExactMatrix even_block(const GradedMatrix& x) { return x.entries().block(0, 0, x.sizes().even, x.sizes().even); }

ExactMatrix odd_block(const GradedMatrix& x) {
  return x.entries().block(x.sizes().even, x.sizes().even, x.sizes().odd, x.sizes().odd);
}

}  // namespace ospd::superalg
