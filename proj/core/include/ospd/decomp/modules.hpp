#pragma once

#include "ospd/repmod/weights.hpp"
#include "ospd/superalg/superalgebra.hpp"

#include <cstdint>
#include <optional>

namespace ospd::decomp {

// V and W of a superalgebra as modules over its even part, split into
// irreducibles with type tags and, when a frame is known, highest weights.
struct ModuleTable {
  repmod::ModuleAction v_action, w_action;
  std::vector<repmod::ModuleComponent> v, w;
};

// Weight frame of the standard realization of `a`, when one is known:
// sl(m,n) as constructed, osp(m,2n) in split form with m >= 3, and the
// example's L (recognized by its recorded conjugation). Frames list the I1
// coroots first, then I2.
std::optional<repmod::WeightFrame> standard_frame(const superalg::Superalgebra& a);

// Types use the ideals I1, I2 and, as the remaining part, U when attached.
ModuleTable analyze_modules(const superalg::Superalgebra& a, std::uint64_t seed = 0);

}  // namespace ospd::decomp
