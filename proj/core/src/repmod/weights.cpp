#include "ospd/repmod/weights.hpp"

#include "ospd/superalg/constructors.hpp"
#include "spectral.hpp"

#include <algorithm>

namespace ospd::repmod {

namespace {

ExactMatrix e(std::size_t n, std::size_t i, std::size_t j) { return ExactMatrix::unit(n, n, i, j); }

}  // namespace

WeightFrame WeightFrame::mapped(const std::function<ExactMatrix(const ExactMatrix&)>& f) const {
  WeightFrame out;
  for (const auto& h : coroots) out.coroots.push_back(f(h));
  for (const auto& x : raising) out.raising.push_back(f(x));
  return out;
}

WeightFrame WeightFrame::concat(const WeightFrame& a, const WeightFrame& b) {
  WeightFrame out = a;
  out.coroots.insert(out.coroots.end(), b.coroots.begin(), b.coroots.end());
  out.raising.insert(out.raising.end(), b.raising.begin(), b.raising.end());
  return out;
}

WeightFrame sl_frame(std::size_t k) {
  WeightFrame f;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    f.coroots.push_back(e(k, i, i) - e(k, i + 1, i + 1));
    f.raising.push_back(e(k, i, i + 1));
  }
  return f;
}

WeightFrame sp_frame(std::size_t n) {
  const std::size_t d = 2 * n;
  WeightFrame f;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    f.coroots.push_back(e(d, i, i) - e(d, i + 1, i + 1) - e(d, n + i, n + i) + e(d, n + i + 1, n + i + 1));
    f.raising.push_back(e(d, i, i + 1) - e(d, n + i + 1, n + i));
  }
  f.coroots.push_back(e(d, n - 1, n - 1) - e(d, 2 * n - 1, 2 * n - 1));
  f.raising.push_back(e(d, n - 1, 2 * n - 1));
  return f;
}

WeightFrame o_split_frame(std::size_t m) {
  if (m < 3) throw std::invalid_argument("o_split_frame: need m >= 3");
  const std::size_t r = m / 2;
  const std::size_t h = r;  // offset of the second half
  WeightFrame f;
  // eps_i - eps_{i+1}
  for (std::size_t i = 0; i + 1 < r; ++i) {
    f.coroots.push_back(e(m, i, i) - e(m, i + 1, i + 1) - e(m, h + i, h + i) + e(m, h + i + 1, h + i + 1));
    f.raising.push_back(e(m, i, i + 1) - e(m, h + i + 1, h + i));
  }
  if (m % 2 == 1) {
    // short root eps_r
    f.coroots.push_back((e(m, r - 1, r - 1) - e(m, 2 * r - 1, 2 * r - 1)) * Scalar(2));
    f.raising.push_back(e(m, r - 1, 2 * r) - e(m, 2 * r, 2 * r - 1));
  } else {
    if (r < 2) throw std::invalid_argument("o_split_frame: o(2) has no simple roots");
    // eps_{r-1} + eps_r
    f.coroots.push_back(e(m, r - 2, r - 2) + e(m, r - 1, r - 1) - e(m, h + r - 2, h + r - 2) - e(m, h + r - 1, h + r - 1));
    f.raising.push_back(e(m, r - 2, h + r - 1) - e(m, r - 1, h + r - 2));
  }
  return f;
}

std::function<ExactMatrix(const ExactMatrix&)> embed_at(std::size_t size, std::size_t at) {
  return [size, at](const ExactMatrix& x) {
    ExactMatrix out(size, size);
    out.set_block(at, at, x);
    return out;
  };
}

std::function<ExactMatrix(const ExactMatrix&)> conjugate_by(const ExactMatrix& t) {
  ExactMatrix inv = exactlin::inverse(t);
  return [t, inv](const ExactMatrix& x) { return t * x * inv; };
}

std::vector<long long> highest_weight(const ModuleAction& m, const ModuleComponent& c, const WeightFrame& frame) {
  const std::size_t d = c.dim();
  if (d == 0) throw WeightError("highest_weight: empty component");
  std::vector<ExactMatrix> hs = m.actions_of(frame.coroots);
  std::vector<ExactMatrix> es = m.actions_of(frame.raising);
  std::vector<ExactMatrix> hs_local = restricted_matrices(hs, c.basis);
  std::vector<ExactMatrix> es_local = restricted_matrices(es, c.basis);

  std::vector<Vector> killed = detail::common_kernel(es_local, d);
  if (killed.empty()) throw WeightError("highest_weight: no vector is killed by the raising elements");

  auto weight_of = [&](const Vector& v) {
    std::vector<long long> w;
    for (const auto& h : hs_local) {
      Vector hv = h.apply(v);
      std::size_t p = 0;
      while (v[p].is_zero()) ++p;
      const Scalar lambda = hv[p] / v[p];
      for (std::size_t i = 0; i < d; ++i)
        if (!(hv[i] == lambda * v[i])) throw WeightError("highest_weight: coroot does not act diagonally");
      if (!lambda.is_real() || !lambda.re().is_integer())
        throw WeightError("highest_weight: non-integral weight " + lambda.str());
      w.push_back(std::stoll(lambda.re().numerator_str()));
    }
    return w;
  };

  std::vector<std::vector<Vector>> lines;
  if (killed.size() == 1) {
    lines.push_back(killed);
  } else {
    // Coroots preserve the killed space; split it into weight lines.
    lines = detail::joint_eigenspaces(hs_local, killed);
  }
  std::optional<std::vector<long long>> best;
  for (const auto& line : lines) {
    if (line.empty()) continue;
    std::vector<long long> w = weight_of(line.front());
    if (!best || w > *best) best = w;
  }
  return *best;
}

std::vector<TensorComponent> tensor_square_decompose(ClassicalFamily family, std::size_t k, std::uint64_t seed) {
  superalg::Superalgebra alg;
  WeightFrame frame;
  if (family == ClassicalFamily::sp) {
    if (k < 1) throw std::invalid_argument("tensor_square_decompose: need k >= 1");
    alg = superalg::build_sp(k);
    frame = sp_frame(k);
  } else {
    if (k < 3) throw std::invalid_argument("tensor_square_decompose: need k >= 3 for o(k)");
    alg = superalg::build_o(k, superalg::OrthoForm::split);
    frame = o_split_frame(k);
  }
  std::vector<ExactMatrix> basis;
  for (const auto& x : alg.basis()) basis.push_back(x.entries());
  ModuleAction v = defining_action(basis);
  ModuleAction vv = outer_tensor(v, v);
  std::vector<ExactMatrix> diagonal;
  for (const auto& x : basis) diagonal.push_back(exactlin::block_diagonal(x, x));
  ModuleAction sq = restrict_action(vv, diagonal);
  WeightFrame diag_frame = frame.mapped([](const ExactMatrix& x) { return exactlin::block_diagonal(x, x); });

  std::vector<TensorComponent> out;
  for (const auto& c : decompose_module(sq, seed)) out.push_back({c.dim(), highest_weight(sq, c, diag_frame)});
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.dim > b.dim; });
  return out;
}

}  // namespace ospd::repmod
