#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ospd::decomp {

enum class Family { osp, sl };

// osp(a, 2b) or sl(a, b). sl(a, b) and sl(b, a) are the same algebra; the
// enumeration lists each once with a > b.
struct Candidate {
  Family family = Family::osp;
  std::size_t a = 0;
  std::size_t b = 0;

  std::size_t even_dim() const;
  std::size_t odd_dim() const;
  std::size_t dim() const { return even_dim() + odd_dim(); }
  std::string str() const;
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct CandidatePair {
  Candidate k;
  Candidate l;
  std::size_t m = 0;  // target osp(m, 2n)
  std::size_t n = 0;
};

enum class ScreenStatus { survives, eliminated };
std::string to_string(ScreenStatus s);

struct ScreenVerdict {
  ScreenStatus status = ScreenStatus::survives;
  std::string rule;    // empty iff the pair survives
  std::string detail;  // the violated condition, with numbers
};

// Necessary conditions for osp(m, 2n) = K + L with K, L proper simple, applied
// in order:
//   sl-sl-excluded, osp-osp-excluded   two summands of the same family
//   m-odd                              m must be even
//   projection-constraint              K = osp(m-1, 2n) and m/2 in {s, l}
//   sl-rank-match                      {s, l} = {m/2, n}
//   graded-dimension                   dim K_i + dim L_i >= dim S_i, i = 0, 1
// A screen, not a decision procedure. Throws std::invalid_argument for
// malformed or non-proper candidates.
ScreenVerdict feasibility_screen(std::size_t m, std::size_t n, const CandidatePair& c);

// Every proper candidate pair (osp, osp), (sl, sl) unordered and (osp, sl).
std::vector<CandidatePair> enumerate_candidates(std::size_t m, std::size_t n);

struct ScreenRow {
  CandidatePair pair;
  ScreenVerdict verdict;
};
std::vector<ScreenRow> screen_all(std::size_t m, std::size_t n);

}  // namespace ospd::decomp
