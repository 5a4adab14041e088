#include "ospd/decomp/verify.hpp"

#include <stdexcept>

namespace ospd::decomp {

GradedDims graded_dims(const Superalgebra& a) { return {a.even_dim(), a.odd_dim()}; }

std::string to_string(Verdict v) { return v == Verdict::exact_sum ? "exact-sum" : "failed"; }

DecompositionReport verify_sum(const Superalgebra& s, const Superalgebra& k, const Superalgebra& l,
                               const VerifyOptions& options) {
  if (!(s.sizes() == k.sizes()) || !(s.sizes() == l.sizes()))
    throw std::invalid_argument("verify_sum: block sizes of S, K, L differ");
  DecompositionReport r;
  r.dims_s = graded_dims(s);
  r.dims_k = graded_dims(k);
  r.dims_l = graded_dims(l);

  const exactlin::Subspace sum = exactlin::subspace_sum(k.span(), l.span());
  r.sum_rank = sum.dim();
  r.intersection_dim = exactlin::subspace_intersect(k.span(), l.span()).dim();

  const auto ck = superalg::is_closed_subalgebra(k.basis(), s);
  const auto cl = superalg::is_closed_subalgebra(l.basis(), s);
  r.closure_k = ck.closed;
  r.closure_l = cl.closed;
  r.proper_k = k.dim() < s.dim();
  r.proper_l = l.dim() < s.dim();

  if (options.fingerprints) {
    r.fingerprint_k = superalg::fingerprint(k, options.seed);
    r.fingerprint_l = superalg::fingerprint(l, options.seed);
  }

  auto fail = [&](std::string why) {
    if (r.reason.empty()) r.reason = std::move(why);
  };
  if (!ck.inside_ambient) fail("K is not contained in S");
  if (!cl.inside_ambient) fail("L is not contained in S");
  if (r.sum_rank < s.dim())
    fail("sum rank " + std::to_string(r.sum_rank) + " < dim S " + std::to_string(s.dim()));
  if (!ck.closed) fail("K is not closed under the superbracket");
  if (!cl.closed) fail("L is not closed under the superbracket");
  r.verdict = r.reason.empty() ? Verdict::exact_sum : Verdict::failed;

  if (!r.proper_k) r.detail += "K is not proper (K = S)";
  if (!r.proper_l) r.detail += std::string(r.detail.empty() ? "" : "; ") + "L is not proper (L = S)";
  return r;
}

}  // namespace ospd::decomp
