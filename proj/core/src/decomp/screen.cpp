#include "ospd/decomp/screen.hpp"

#include <algorithm>
#include <stdexcept>

namespace ospd::decomp {

namespace {

std::size_t osp_even(std::size_t a, std::size_t b) { return a * (a - 1) / 2 + b * (2 * b + 1); }

std::string num(std::size_t v) { return std::to_string(v); }

void validate(const Candidate& c) {
  if (c.a == 0 || c.b == 0) throw std::invalid_argument("candidate " + c.str() + ": parameters must be positive");
  if (c.family == Family::sl && c.a == c.b) throw std::invalid_argument("candidate " + c.str() + ": sl(n,n) is not simple");
}

}  // namespace

std::size_t Candidate::even_dim() const {
  return family == Family::osp ? osp_even(a, b) : a * a + b * b - 1;
}

std::size_t Candidate::odd_dim() const { return 2 * a * b; }

std::string Candidate::str() const {
  return family == Family::osp ? "osp(" + num(a) + "," + num(2 * b) + ")" : "sl(" + num(a) + "," + num(b) + ")";
}

std::string to_string(ScreenStatus s) { return s == ScreenStatus::survives ? "survives" : "eliminated"; }

ScreenVerdict feasibility_screen(std::size_t m, std::size_t n, const CandidatePair& c) {
  if (m < 1 || n < 1) throw std::invalid_argument("feasibility_screen: need m, n >= 1");
  validate(c.k);
  validate(c.l);
  const Candidate target{Family::osp, m, n};
  for (const auto* x : {&c.k, &c.l})
    if (x->dim() >= target.dim())
      throw std::invalid_argument("feasibility_screen: " + x->str() + " is not a proper subalgebra of " + target.str());

  auto out = [](std::string rule, std::string detail) {
    return ScreenVerdict{ScreenStatus::eliminated, std::move(rule), std::move(detail)};
  };
  if (c.k.family == Family::sl && c.l.family == Family::sl)
    return out("sl-sl-excluded", "no sum of two sl-type subalgebras");
  if (c.k.family == Family::osp && c.l.family == Family::osp)
    return out("osp-osp-excluded", "no sum of two osp-type subalgebras");
  if (m % 2 == 1) return out("m-odd", "m = " + num(m) + " is odd");

  const Candidate& o = c.k.family == Family::osp ? c.k : c.l;
  const Candidate& s = c.k.family == Family::sl ? c.k : c.l;
  const std::size_t h = m / 2;
  if (o.a != m - 1 || o.b != n)
    return out("projection-constraint", "need " + Candidate{Family::osp, m - 1, n}.str() + ", got " + o.str());
  if (s.a != h && s.b != h)
    return out("projection-constraint", "sl block sizes " + num(s.a) + "," + num(s.b) + " miss m/2 = " + num(h));
  const std::size_t other = s.a == h ? s.b : s.a;
  if (other != n)
    return out("sl-rank-match", "need {" + num(h) + "," + num(n) + "}, got {" + num(s.a) + "," + num(s.b) + "}");

  const std::size_t e = c.k.even_dim() + c.l.even_dim();
  if (e < target.even_dim())
    return out("graded-dimension", "even: " + num(e) + " < " + num(target.even_dim()));
  const std::size_t d = c.k.odd_dim() + c.l.odd_dim();
  if (d < target.odd_dim()) return out("graded-dimension", "odd: " + num(d) + " < " + num(target.odd_dim()));
  return {ScreenStatus::survives, "", ""};
}

std::vector<CandidatePair> enumerate_candidates(std::size_t m, std::size_t n) {
  const std::size_t bound = Candidate{Family::osp, m, n}.dim();
  std::vector<Candidate> osps, sls;
  // dim osp(a, 2b) >= a(a-1)/2 and >= 2b^2, so a and b are bounded by the target dim.
  for (std::size_t a = 1; a * (a - 1) / 2 < bound; ++a)
    for (std::size_t b = 1; 2 * b * b < bound; ++b)
      if (Candidate c{Family::osp, a, b}; c.dim() < bound) osps.push_back(c);
  for (std::size_t a = 2; a * a <= bound; ++a)
    for (std::size_t b = 1; b < a; ++b)
      if (Candidate c{Family::sl, a, b}; c.dim() < bound) sls.push_back(c);

  std::vector<CandidatePair> out;
  for (std::size_t i = 0; i < osps.size(); ++i)
    for (std::size_t j = i; j < osps.size(); ++j) out.push_back({osps[i], osps[j], m, n});
  for (std::size_t i = 0; i < sls.size(); ++i)
    for (std::size_t j = i; j < sls.size(); ++j) out.push_back({sls[i], sls[j], m, n});
  for (const auto& o : osps)
    for (const auto& s : sls) out.push_back({o, s, m, n});
  return out;
}

std::vector<ScreenRow> screen_all(std::size_t m, std::size_t n) {
  std::vector<ScreenRow> rows;
  for (const auto& c : enumerate_candidates(m, n)) rows.push_back({c, feasibility_screen(m, n, c)});
  return rows;
}

}  // namespace ospd::decomp
