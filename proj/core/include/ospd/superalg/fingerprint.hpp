#pragma once

#include "ospd/superalg/superalgebra.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ospd::superalg {

// How the odd part splits under one named even ideal: (multiplicity, dim)
// pairs sorted by decreasing dimension.
struct OddSplit {
  std::string ideal;
  std::vector<std::pair<std::size_t, std::size_t>> parts;
  friend bool operator==(const OddSplit&, const OddSplit&) = default;
};

struct StructureFingerprint {
  std::size_t even_dim = 0;
  std::size_t odd_dim = 0;
  std::vector<std::size_t> even_ideal_dims;  // ascending
  std::vector<OddSplit> odd_module_split;    // one entry per nonzero ideal I1, I2
  friend bool operator==(const StructureFingerprint&, const StructureFingerprint&) = default;
};

// Graded dims; dimensions of the irreducible pieces of the adjoint action of
// the even part on itself; the odd part split under each attached ideal.
StructureFingerprint fingerprint(const Superalgebra& a, std::uint64_t seed = 0);

// The pattern predicted for a standard family by its structure statement:
// sl(m,n) and osp(m,2n), with the label params as in the constructors.
StructureFingerprint expected_fingerprint(const AlgebraLabel& label);

}  // namespace ospd::superalg
