#pragma once

#include "ospd/repmod/decompose.hpp"

#include <functional>
#include <stdexcept>

namespace ospd::repmod {

class WeightError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple coroots and simple raising elements of a standard realization, as
// matrices of the acting algebra. Weights are coroot eigenvalues, i.e.
// coordinates in the fundamental-weight basis.
struct WeightFrame {
  std::vector<ExactMatrix> coroots;
  std::vector<ExactMatrix> raising;

  std::size_t rank() const { return coroots.size(); }
  // Applies f to every element (embedding, conjugation, ...).
  WeightFrame mapped(const std::function<ExactMatrix(const ExactMatrix&)>& f) const;
  // Frame of a direct sum: coroots and raising elements side by side.
  static WeightFrame concat(const WeightFrame& a, const WeightFrame& b);
};

// sl(k): H_i = E_ii - E_{i+1,i+1}, raising E_{i,i+1}.
WeightFrame sl_frame(std::size_t k);
// sp(2n) for the form G = [[0, I], [-I, 0]].
WeightFrame sp_frame(std::size_t n);
// o(m), m >= 3, for the split ortho form.
WeightFrame o_split_frame(std::size_t m);

// X -> X placed at diagonal offset `at` inside a `size` x `size` zero matrix.
std::function<ExactMatrix(const ExactMatrix&)> embed_at(std::size_t size, std::size_t at);
// X -> T X T^{-1}.
std::function<ExactMatrix(const ExactMatrix&)> conjugate_by(const ExactMatrix& t);

// Highest weight of an irreducible component: the weight of the vector killed
// by every raising element. When the killed space has several weight lines
// the lexicographically largest weight is returned. Throws WeightError when a
// coroot does not act diagonally there or a weight is not an integer.
std::vector<long long> highest_weight(const ModuleAction& m, const ModuleComponent& c, const WeightFrame& frame);

enum class ClassicalFamily { sp, o };

struct TensorComponent {
  std::size_t dim = 0;
  std::vector<long long> highest_weight;
};

// Splits V (x) V for the defining module V of sp(2k) (family sp) or of o(k)
// in split form (family o), acting diagonally. Sorted by decreasing dimension.
std::vector<TensorComponent> tensor_square_decompose(ClassicalFamily family, std::size_t k, std::uint64_t seed = 0);

}  // namespace ospd::repmod
