#include <doctest.h>

#include "ospd/decomp/decomposition.hpp"
#include "ospd/decomp/screen.hpp"
#include "ospd/decomp/verify.hpp"

#include <algorithm>
#include <set>
#include <tuple>

using namespace ospd::decomp;

namespace {

// (osp a, osp b, sl s, sl l) with {s, l} sorted descending.
using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;

Key key_of(const CandidatePair& c) {
  const Candidate& o = c.k.family == Family::osp ? c.k : c.l;
  const Candidate& s = c.k.family == Family::sl ? c.k : c.l;
  return {o.a, o.b, std::max(s.a, s.b), std::min(s.a, s.b)};
}

// The pairs the classification allows: osp(m-1, 2n) + sl(m/2, n), m even, m/2 != n.
std::set<Key> expected_survivors(std::size_t m, std::size_t n) {
  if (m % 2 == 1 || m / 2 == n) return {};
  return {{m - 1, n, std::max(m / 2, n), std::min(m / 2, n)}};
}

std::size_t osp_dim(std::size_t a, std::size_t b) { return a * (a - 1) / 2 + b * (2 * b + 1) + 2 * a * b; }

}  // namespace

TEST_CASE("candidate dimensions") {
  CHECK(Candidate{Family::osp, 4, 1}.even_dim() == 9);
  CHECK(Candidate{Family::osp, 4, 1}.odd_dim() == 8);
  CHECK(Candidate{Family::sl, 3, 2}.even_dim() == 12);
  CHECK(Candidate{Family::sl, 3, 2}.odd_dim() == 12);
  CHECK(Candidate{Family::osp, 5, 2}.str() == "osp(5,4)");
  CHECK(Candidate{Family::sl, 3, 2}.str() == "sl(3,2)");
}

TEST_CASE("screen examples") {
  const CandidatePair good{{Family::osp, 5, 2}, {Family::sl, 3, 2}, 6, 2};
  CHECK(feasibility_screen(6, 2, good).status == ScreenStatus::survives);
  CHECK(feasibility_screen(6, 2, good).rule.empty());

  for (const auto& c : enumerate_candidates(5, 2)) {
    ScreenVerdict v = feasibility_screen(5, 2, c);
    CHECK(v.status == ScreenStatus::eliminated);
    if (c.k.family != c.l.family) CHECK(v.rule == "m-odd");
  }

  ScreenVerdict slsl = feasibility_screen(6, 2, {{Family::sl, 4, 2}, {Family::sl, 3, 2}, 6, 2});
  CHECK(slsl.status == ScreenStatus::eliminated);
  CHECK(slsl.rule == "sl-sl-excluded");
  CHECK(feasibility_screen(6, 2, {{Family::osp, 5, 2}, {Family::osp, 4, 2}, 6, 2}).rule == "osp-osp-excluded");

  ScreenVerdict wrong_p = feasibility_screen(6, 2, {{Family::osp, 4, 2}, {Family::sl, 3, 2}, 6, 2});
  CHECK(wrong_p.rule == "projection-constraint");
  CHECK(wrong_p.detail.find("osp(5,4)") != std::string::npos);
  CHECK(feasibility_screen(6, 2, {{Family::osp, 5, 2}, {Family::sl, 4, 2}, 6, 2}).rule == "projection-constraint");
  CHECK(feasibility_screen(6, 2, {{Family::osp, 5, 2}, {Family::sl, 3, 1}, 6, 2}).rule == "sl-rank-match");

  CHECK_THROWS_AS(feasibility_screen(6, 2, {{Family::osp, 6, 2}, {Family::sl, 3, 2}, 6, 2}), std::invalid_argument);
  CHECK_THROWS_AS(feasibility_screen(6, 2, {{Family::osp, 5, 2}, {Family::sl, 2, 2}, 6, 2}), std::invalid_argument);
  CHECK_THROWS_AS(feasibility_screen(6, 2, {{Family::osp, 0, 2}, {Family::sl, 3, 2}, 6, 2}), std::invalid_argument);
}

TEST_CASE("enumeration covers every proper candidate once") {
  for (std::size_t m : {3, 4, 6}) {
    for (std::size_t n : {1, 2}) {
      const std::size_t bound = osp_dim(m, n);
      // Brute-force count of proper osp and sl candidates.
      std::size_t osps = 0, sls = 0;
      for (std::size_t a = 1; a <= bound; ++a)
        for (std::size_t b = 1; b <= bound; ++b) {
          if (osp_dim(a, b) < bound) ++osps;
          if (a > b && (a + b) * (a + b) - 1 < bound) ++sls;
        }
      const auto pairs = enumerate_candidates(m, n);
      CHECK(pairs.size() == osps * (osps + 1) / 2 + sls * (sls + 1) / 2 + osps * sls);
    }
  }
}

TEST_CASE("screen survivors match the classification for m <= 8, n <= 3") {
  for (std::size_t m = 3; m <= 8; ++m)
    for (std::size_t n = 1; n <= 3; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      std::set<Key> survivors;
      for (const auto& row : screen_all(m, n)) {
        if (row.verdict.status == ScreenStatus::survives) {
          survivors.insert(key_of(row.pair));
          CHECK(row.verdict.rule.empty());
        } else {
          CHECK_FALSE(row.verdict.rule.empty());
          CHECK_FALSE(row.verdict.detail.empty());
        }
      }
      CHECK(survivors == expected_survivors(m, n));
    }
}

TEST_CASE("every survivor is realized by the explicit construction") {
  for (std::size_t m = 4; m <= 8; m += 2)
    for (std::size_t n = 1; n <= 3; ++n) {
      if (m / 2 == n) continue;
      CAPTURE(m);
      CAPTURE(n);
      ExampleDecomposition ex = build_example_decomposition(m / 2, n);
      CHECK(ex.k.dim() == Candidate{Family::osp, m - 1, n}.dim());
      CHECK(ex.l.dim() == Candidate{Family::sl, m / 2, n}.dim());
      if (m * n <= 12) CHECK(verify_sum(ex.s, ex.k, ex.l, {.fingerprints = false}).verdict == Verdict::exact_sum);
    }
}
