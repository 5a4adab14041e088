#include "ospd/superalg/fingerprint.hpp"

#include "ospd/repmod/decompose.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ospd::superalg {

namespace {

std::vector<std::pair<std::size_t, std::size_t>> group_dims(const std::vector<std::size_t>& dims) {
  std::map<std::size_t, std::size_t, std::greater<>> count;
  for (auto d : dims) ++count[d];
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [d, c] : count) out.emplace_back(c, d);
  return out;
}

std::size_t odim(std::size_t m) { return m * (m - 1) / 2; }

}  // namespace

StructureFingerprint fingerprint(const Superalgebra& a, std::uint64_t seed) {
  StructureFingerprint f;
  f.even_dim = a.even_dim();
  f.odd_dim = a.odd_dim();
  const auto even = a.even_basis();
  const auto odd = a.odd_basis();
  for (const auto& c : repmod::decompose_module(repmod::adjoint_action(even, even), seed))
    f.even_ideal_dims.push_back(c.dim());
  std::sort(f.even_ideal_dims.begin(), f.even_ideal_dims.end());
  for (const char* name : {"I1", "I2"}) {
    const NamedIdeal* ideal = a.ideal(name);
    if (!ideal || ideal->basis.empty() || odd.empty()) continue;
    std::vector<std::size_t> dims;
    for (const auto& c : repmod::decompose_module(repmod::adjoint_action(ideal->basis, odd), seed))
      dims.push_back(c.dim());
    f.odd_module_split.push_back({name, group_dims(dims)});
  }
  return f;
}

StructureFingerprint expected_fingerprint(const AlgebraLabel& label) {
  StructureFingerprint f;
  if (label.params.size() != 2) throw std::invalid_argument("expected_fingerprint: unsupported label " + label.str());
  const auto p = static_cast<std::size_t>(label.params[0]);
  const auto q = static_cast<std::size_t>(label.params[1]);
  if (label.family == "sl") {
    const std::size_t m = p, n = q;
    f.even_dim = m * m + n * n - 1;
    f.odd_dim = 2 * m * n;
    if (m >= 2) f.even_ideal_dims.push_back(m * m - 1);
    if (n >= 2) f.even_ideal_dims.push_back(n * n - 1);
    f.even_ideal_dims.push_back(1);
    if (m >= 2) f.odd_module_split.push_back({"I1", {{2 * n, m}}});
    if (n >= 2) f.odd_module_split.push_back({"I2", {{2 * m, n}}});
  } else if (label.family == "osp") {
    const std::size_t m = p, n = q / 2;
    f.even_dim = odim(m) + n * (2 * n + 1);
    f.odd_dim = 2 * m * n;
    if (m == 2) {
      f.even_ideal_dims.push_back(1);
    } else if (m == 4) {
      f.even_ideal_dims.insert(f.even_ideal_dims.end(), {3, 3});
    } else {
      f.even_ideal_dims.push_back(odim(m));
    }
    f.even_ideal_dims.push_back(n * (2 * n + 1));
    // The defining o(2)-module splits into two lines over Q(i).
    f.odd_module_split.push_back({"I1", m == 2 ? std::vector<std::pair<std::size_t, std::size_t>>{{4 * n, 1}}
                                              : std::vector<std::pair<std::size_t, std::size_t>>{{2 * n, m}}});
    f.odd_module_split.push_back({"I2", {{m, 2 * n}}});
  } else {
    throw std::invalid_argument("expected_fingerprint: unsupported family " + label.family);
  }
  std::sort(f.even_ideal_dims.begin(), f.even_ideal_dims.end());
  return f;
}

}  // namespace ospd::superalg
