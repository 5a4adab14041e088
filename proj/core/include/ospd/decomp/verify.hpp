#pragma once

#include "ospd/superalg/fingerprint.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace ospd::decomp {

using superalg::Superalgebra;
using superalg::StructureFingerprint;

struct GradedDims {
  std::size_t even = 0;
  std::size_t odd = 0;
  std::size_t total() const { return even + odd; }
  friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

GradedDims graded_dims(const Superalgebra& a);

enum class Verdict { exact_sum, failed };
std::string to_string(Verdict v);

struct DecompositionReport {
  GradedDims dims_s, dims_k, dims_l;
  std::size_t sum_rank = 0;
  std::size_t intersection_dim = 0;
  bool closure_k = false;
  bool closure_l = false;
  bool proper_k = false;
  bool proper_l = false;
  std::optional<StructureFingerprint> fingerprint_k;
  std::optional<StructureFingerprint> fingerprint_l;
  Verdict verdict = Verdict::failed;
  std::string reason;  // why the verdict failed; empty on success
  std::string detail;  // remarks that do not affect the verdict
};

struct VerifyOptions {
  bool fingerprints = true;
  std::uint64_t seed = 0;
};

// Certifies S = K + L as vector spaces together with closure of K and L.
// exact_sum iff the sum has rank dim S and both summands are closed; a summand
// equal to S is reported in `detail`, not as a failure. Throws
// std::invalid_argument on mismatched block sizes.
DecompositionReport verify_sum(const Superalgebra& s, const Superalgebra& k, const Superalgebra& l,
                               const VerifyOptions& options = {});

}  // namespace ospd::decomp
