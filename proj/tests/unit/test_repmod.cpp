#include <doctest.h>

#include "ospd/repmod/weights.hpp"
#include "ospd/superalg/constructors.hpp"
#include "ospd/superalg/fingerprint.hpp"
#include "oracles/elimination.hpp"
#include "oracles/invariant_search.hpp"

using namespace ospd::repmod;
using namespace ospd::superalg;
using ospd::exactlin::block_diagonal;

namespace {

std::vector<ExactMatrix> entries(const std::vector<GradedMatrix>& xs) {
  std::vector<ExactMatrix> out;
  for (const auto& x : xs) out.push_back(x.entries());
  return out;
}

ModuleAction defining(const Superalgebra& a) { return defining_action(entries(a.basis())); }

ModuleAction dual(const ModuleAction& m) {
  ModuleAction d = m;
  for (auto& x : d.matrices) x = -x.transpose();
  return d;
}

ModuleAction direct_sum(const ModuleAction& a, const ModuleAction& b) {
  ModuleAction out;
  out.acting = a.acting;
  out.dim = a.dim + b.dim;
  for (std::size_t i = 0; i < a.matrices.size(); ++i) out.matrices.push_back(block_diagonal(a.matrices[i], b.matrices[i]));
  return out;
}

ModuleAction trivial_like(const ModuleAction& a, std::size_t dim) {
  ModuleAction out;
  out.acting = a.acting;
  out.dim = dim;
  out.matrices.assign(a.matrices.size(), ExactMatrix(dim, dim));
  return out;
}

void check_decomposition(const ModuleAction& m, const std::vector<ModuleComponent>& parts) {
  std::size_t total = 0;
  std::vector<Vector> all;
  for (const auto& c : parts) {
    total += c.dim();
    for (const auto& b : c.basis) all.push_back(b);
    CHECK(is_invariant(m.matrices, c.basis));
    if (c.dim() <= 10) CHECK(burnside_irreducible(restricted_matrices(m.matrices, c.basis), c.dim()));
  }
  CHECK(total == m.dim);
  CHECK(ospd::oracles::gauss_rank(all) == m.dim);
}

}  // namespace

TEST_CASE("natural and adjoint actions are homomorphisms") {
  Superalgebra s = build_osp(4, 1);
  ModuleAction v = restrict_natural_action(s, NaturalBlock::V);
  ModuleAction w = restrict_natural_action(s, NaturalBlock::W);
  CHECK(v.dim == 4);
  CHECK(w.dim == 2);
  CHECK(v.is_homomorphism());
  CHECK(w.is_homomorphism());
  ModuleAction ad = adjoint_action(s.even_basis(), s.odd_basis());
  CHECK(ad.dim == 8);
  CHECK(ad.is_homomorphism());
  ModuleAction broken = v;
  for (auto& x : broken.matrices)
    if (!x.is_zero()) {
      x = x * Scalar(2);
      break;
    }
  CHECK_FALSE(broken.is_homomorphism());
  CHECK_THROWS(adjoint_action(s.even_basis(), {s.odd_basis().front()}));
}

TEST_CASE("zero algebra acts by zero") {
  Superalgebra s = build_osp(4, 1);
  ModuleAction m = natural_action({}, NaturalBlock::V);
  m.dim = 3;
  CHECK(m.matrices.empty());
  CHECK(m.action_of(ExactMatrix(6, 6)).is_zero());
  auto parts = decompose_module(m);
  CHECK(parts.size() == 3);
  CHECK(classify_type(parts.front(), {}, {}) == ModuleType::type1);
}

TEST_CASE("decompose: small examples") {
  Superalgebra s = build_osp(4, 1);
  ModuleAction w = restrict_natural_action(s, NaturalBlock::W);
  auto wp = decompose_module(w);
  CHECK(wp.size() == 1);
  CHECK(wp.front().dim() == 2);

  ModuleAction sl2 = defining(build_sl_classical(2));
  ModuleAction aa = direct_sum(sl2, sl2);
  auto parts = decompose_module(aa, 5);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].dim() == 2);
  CHECK(parts[1].dim() == 2);
  check_decomposition(aa, parts);
  // Oracle: a (+) a is reducible by exhaustive search; each half is not.
  CHECK(ospd::oracles::reducible_by_search(aa.matrices, 4));
  CHECK_FALSE(ospd::oracles::reducible_by_search(sl2.matrices, 2));

  ModuleAction mixed = direct_sum(direct_sum(dual(defining(build_sl_classical(3))), trivial_like(defining(build_sl_classical(3)), 2)),
                                  defining(build_sl_classical(3)));
  auto mp = decompose_module(mixed, 1);
  CHECK(mp.size() == 4);
  check_decomposition(mixed, mp);

  ModuleAction nil;
  nil.dim = 2;
  nil.matrices = {ExactMatrix::unit(2, 2, 0, 1)};
  CHECK_THROWS_AS(decompose_module(nil), SplittingFailure);
}

TEST_CASE("decompose: larger modules") {
  Superalgebra s = build_osp(5, 2);
  ModuleAction odd = adjoint_action(s.even_basis(), s.odd_basis());
  auto parts = decompose_module(odd);
  CHECK(parts.size() == 1);
  Superalgebra sl = build_sl(3, 2);
  auto sp = decompose_module(adjoint_action(sl.even_basis(), sl.odd_basis()));
  REQUIRE(sp.size() == 2);
  CHECK(sp[0].dim() == 6);
  CHECK(sp[1].dim() == 6);
  check_decomposition(adjoint_action(sl.even_basis(), sl.odd_basis()), sp);
  // Isotypic: the odd part under o(5) is four copies of the defining module.
  ModuleAction iso = adjoint_action(s.ideal("I1")->basis, s.odd_basis());
  auto ip = decompose_module(iso, 3);
  CHECK(ip.size() == 4);
  check_decomposition(iso, ip);
}

TEST_CASE("burnside agrees with exhaustive search and the naive envelope") {
  struct Case {
    std::string name;
    std::vector<ExactMatrix> mats;
    std::size_t dim;
  };
  std::vector<Case> cases;
  auto add = [&](std::string name, const ModuleAction& m) { cases.push_back({std::move(name), m.matrices, m.dim}); };
  ModuleAction sl2 = defining(build_sl_classical(2));
  ModuleAction sl3 = defining(build_sl_classical(3));
  add("sl2", sl2);
  add("sl3", sl3);
  add("sl3*", dual(sl3));
  add("sp4", defining(build_sp(2)));
  add("sp2", defining(build_sp(1)));
  add("o3", defining(build_o(3)));
  add("o3 split", defining(build_o(3, OrthoForm::split)));
  add("o4", defining(build_o(4)));
  add("o5", defining(build_o(5)));
  add("o6 split", defining(build_o(6, OrthoForm::split)));
  add("o2", defining(build_o(2)));
  add("sl2+sl2", direct_sum(sl2, sl2));
  add("sl2+triv", direct_sum(sl2, trivial_like(sl2, 1)));
  add("sl3+triv", direct_sum(sl3, trivial_like(sl3, 1)));
  add("ad sl2", adjoint_action(build_sl_classical(2).basis(), build_sl_classical(2).basis()));
  add("sl2 x sl2", outer_tensor(sl2, sl2));
  add("sl2 x sl3", outer_tensor(sl2, sl3));
  add("sl2 (x) sl2 diagonal",
      restrict_action(outer_tensor(sl2, sl2), [&] {
        std::vector<ExactMatrix> d;
        for (const auto& x : sl2.acting) d.push_back(block_diagonal(x, x));
        return d;
      }()));
  add("zero 1", trivial_like(sl2, 1));
  add("zero 2", trivial_like(sl2, 2));
  {
    ModuleAction nil;
    nil.dim = 3;
    nil.matrices = {ExactMatrix::unit(3, 3, 0, 1) + ExactMatrix::unit(3, 3, 1, 2)};
    add("jordan", nil);
  }
  {
    ModuleAction d;
    d.dim = 2;
    d.matrices = {ExactMatrix{{1, 0}, {0, 2}}};
    add("diag", d);
  }
  add("sl2 on odd sl(2,1)", adjoint_action(build_sl(2, 1).ideal("I1")->basis, build_sl(2, 1).odd_basis()));
  REQUIRE(cases.size() >= 20);
  std::size_t positives = 0;
  std::size_t negatives = 0;
  for (const auto& c : cases) {
    CAPTURE(c.name);
    REQUIRE(c.dim <= 6);
    const bool burnside = burnside_irreducible(c.mats, c.dim);
    const bool search = !ospd::oracles::reducible_by_search(c.mats, c.dim);
    CHECK(burnside == search);
    CHECK(envelope_dimension(c.mats, c.dim) == ospd::oracles::naive_envelope_dim(c.mats, c.dim));
    (burnside ? positives : negatives)++;
  }
  CHECK(positives >= 5);
  CHECK(negatives >= 5);
  CHECK(envelope_dimension(defining(build_sp(2)).matrices, 4) == 16);
}

TEST_CASE("weight frames lie in their algebras") {
  for (std::size_t k : {2, 3, 4}) {
    Superalgebra a = build_sl_classical(k);
    WeightFrame f = sl_frame(k);
    for (const auto& x : f.coroots) CHECK(a.contains(x));
    for (const auto& x : f.raising) CHECK(a.contains(x));
  }
  for (std::size_t n : {1, 2, 3}) {
    Superalgebra a = build_sp(n);
    WeightFrame f = sp_frame(n);
    CHECK(f.rank() == n);
    for (const auto& x : f.coroots) CHECK(a.contains(x));
    for (const auto& x : f.raising) CHECK(a.contains(x));
  }
  for (std::size_t m : {3, 4, 5, 6, 7}) {
    Superalgebra a = build_o(m, OrthoForm::split);
    WeightFrame f = o_split_frame(m);
    CHECK(f.rank() == m / 2);
    for (const auto& x : f.coroots) CHECK(a.contains(x));
    for (const auto& x : f.raising) CHECK(a.contains(x));
  }
}

TEST_CASE("highest weights of defining modules") {
  ModuleAction sl3 = defining(build_sl_classical(3));
  ModuleComponent whole;
  for (std::size_t i = 0; i < 3; ++i) {
    Vector v(3);
    v[i] = Scalar(1);
    whole.basis.push_back(v);
  }
  CHECK(highest_weight(sl3, whole, sl_frame(3)) == std::vector<long long>{1, 0});
  CHECK(highest_weight(dual(sl3), whole, sl_frame(3)) == std::vector<long long>{0, 1});
  ModuleAction sp4 = defining(build_sp(2));
  auto parts = decompose_module(sp4);
  REQUIRE(parts.size() == 1);
  CHECK(highest_weight(sp4, parts.front(), sp_frame(2)) == std::vector<long long>{1, 0});
}

TEST_CASE("odd part of sl(m,n) has weights (lambda, mu) and (mu, lambda)") {
  Superalgebra s = build_sl(3, 2);
  ModuleAction odd = adjoint_action(s.even_basis(), s.odd_basis());
  WeightFrame f = WeightFrame::concat(sl_frame(3).mapped(embed_at(5, 0)), sl_frame(2).mapped(embed_at(5, 3)));
  std::vector<std::vector<long long>> weights;
  for (const auto& c : decompose_module(odd)) weights.push_back(highest_weight(odd, c, f));
  std::sort(weights.begin(), weights.end());
  CHECK(weights == std::vector<std::vector<long long>>{{0, 1, 1}, {1, 0, 1}});
}

TEST_CASE("outer tensor products") {
  ModuleAction sl2 = defining(build_sl_classical(2));
  ModuleAction sl3 = defining(build_sl_classical(3));
  ModuleAction t = outer_tensor(sl2, sl3);
  CHECK(t.dim == 6);
  CHECK(t.is_homomorphism());
  CHECK(burnside_irreducible(t));
  auto parts = decompose_module(t);
  REQUIRE(parts.size() == 1);
  WeightFrame f = WeightFrame::concat(sl_frame(2).mapped(embed_at(5, 0)), sl_frame(3).mapped(embed_at(5, 2)));
  CHECK(highest_weight(t, parts.front(), f) == std::vector<long long>{1, 1, 0});

  ModuleAction t22 = outer_tensor(sl2, sl2);
  WeightFrame f22 = WeightFrame::concat(sl_frame(2).mapped(embed_at(4, 0)), sl_frame(2).mapped(embed_at(4, 2)));
  auto p22 = decompose_module(t22);
  REQUIRE(p22.size() == 1);
  CHECK(highest_weight(t22, p22.front(), f22) == std::vector<long long>{1, 1});

  // U (x) trivial acts like U.
  ModuleAction one;
  one.dim = 1;
  ModuleAction u1 = outer_tensor(sl3, one);
  CHECK(u1.dim == 3);
  for (std::size_t i = 0; i < sl3.matrices.size(); ++i) CHECK(u1.matrices[i] == sl3.matrices[i]);

  // Irreducible pairs stay irreducible and weights concatenate.
  std::vector<std::pair<ModuleAction, WeightFrame>> irr = {
      {sl2, sl_frame(2)}, {sl3, sl_frame(3)}, {dual(sl3), sl_frame(3)}, {defining(build_sp(2)), sp_frame(2)}};
  for (const auto& [a, fa] : irr)
    for (const auto& [b, fb] : irr) {
      ModuleAction ab = outer_tensor(a, b);
      CHECK(burnside_irreducible(ab));
      const std::size_t na = a.acting.front().rows();
      const std::size_t nb = b.acting.front().rows();
      WeightFrame fab = WeightFrame::concat(fa.mapped(embed_at(na + nb, 0)), fb.mapped(embed_at(na + nb, na)));
      ModuleComponent whole;
      for (std::size_t i = 0; i < ab.dim; ++i) {
        Vector v(ab.dim);
        v[i] = Scalar(1);
        whole.basis.push_back(v);
      }
      ModuleComponent ca, cb;
      for (std::size_t i = 0; i < a.dim; ++i) {
        Vector v(a.dim);
        v[i] = Scalar(1);
        ca.basis.push_back(v);
      }
      for (std::size_t i = 0; i < b.dim; ++i) {
        Vector v(b.dim);
        v[i] = Scalar(1);
        cb.basis.push_back(v);
      }
      std::vector<long long> expect = highest_weight(a, ca, fa);
      std::vector<long long> wb = highest_weight(b, cb, fb);
      expect.insert(expect.end(), wb.begin(), wb.end());
      CHECK(highest_weight(ab, whole, fab) == expect);
    }
}

TEST_CASE("tensor squares") {
  auto sp4 = tensor_square_decompose(ClassicalFamily::sp, 2);
  REQUIRE(sp4.size() == 3);
  CHECK(sp4[0].dim == 10);
  CHECK(sp4[1].dim == 5);
  CHECK(sp4[2].dim == 1);
  CHECK(sp4[0].highest_weight == std::vector<long long>{2, 0});
  CHECK(sp4[1].highest_weight == std::vector<long long>{0, 1});
  CHECK(sp4[2].highest_weight == std::vector<long long>{0, 0});

  auto o3 = tensor_square_decompose(ClassicalFamily::o, 3);
  REQUIRE(o3.size() == 3);
  CHECK(o3[0].dim == 5);
  CHECK(o3[1].dim == 3);
  CHECK(o3[2].dim == 1);
  CHECK(o3[0].highest_weight == std::vector<long long>{4});
  CHECK(o3[1].highest_weight == std::vector<long long>{2});
  CHECK(o3[2].highest_weight == std::vector<long long>{0});
}

TEST_CASE("classify types") {
  Superalgebra s = build_sl(3, 2);
  ModuleAction odd = adjoint_action(s.even_basis(), s.odd_basis());
  auto i1 = odd.actions_of(entries(s.ideal("I1")->basis));
  auto i2 = odd.actions_of(entries(s.ideal("I2")->basis));
  for (const auto& c : decompose_module(odd)) CHECK(classify_type(c, i1, i2) == ModuleType::type4);
  ModuleAction v = restrict_natural_action(s, NaturalBlock::V);
  auto vi1 = v.actions_of(entries(s.ideal("I1")->basis));
  auto vi2 = v.actions_of(entries(s.ideal("I2")->basis));
  auto vu = v.actions_of(entries(s.ideal("U")->basis));
  auto vp = decompose_module(v);
  REQUIRE(vp.size() == 1);
  CHECK(classify_type(vp.front(), vi1, vi2, vu) == ModuleType::type2);
  ModuleAction w = restrict_natural_action(s, NaturalBlock::W);
  auto wp = decompose_module(w);
  CHECK(classify_type(wp.front(), w.actions_of(entries(s.ideal("I1")->basis)),
                      w.actions_of(entries(s.ideal("I2")->basis))) == ModuleType::type3);
  // Only the centre acts: no type applies.
  Superalgebra s21 = build_sl(2, 1);
  ModuleAction w21 = restrict_natural_action(s21, NaturalBlock::W);
  auto w21p = decompose_module(w21);
  REQUIRE(w21p.size() == 1);
  CHECK(classify_type(w21p.front(), w21.actions_of(entries(s21.ideal("I1")->basis)), {},
                      w21.actions_of(entries(s21.ideal("U")->basis))) == ModuleType::unclassified);
  CHECK(to_string(ModuleType::type3) == "3");
}

TEST_CASE("projection views") {
  Superalgebra s = build_osp(4, 1);
  auto vp = decompose_module(restrict_natural_action(s, NaturalBlock::V));
  auto wp = decompose_module(restrict_natural_action(s, NaturalBlock::W));
  ProjectionView view = projection_view(s.odd_basis(), vp, wp, 0, 0);
  CHECK(view.matrices.size() == 8);
  bool nonzero = false;
  for (const auto& m : view.matrices) nonzero = nonzero || !m.is_zero();
  CHECK(nonzero);
  GradedMatrix zero(s.sizes(), ExactMatrix(6, 6), Parity::odd);
  CHECK(projection_view({zero}, vp, wp, 0, 0).matrices.front().is_zero());
  CHECK_THROWS(projection_view(s.odd_basis(), vp, wp, 3, 0));
}

TEST_CASE("fingerprints of standard algebras") {
  StructureFingerprint f21 = fingerprint(build_sl(2, 1));
  CHECK(f21.even_dim == 4);
  REQUIRE(f21.odd_module_split.size() == 1);
  CHECK(f21.odd_module_split[0].parts == std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}});
  CHECK(f21 == expected_fingerprint(build_sl(2, 1).label()));

  StructureFingerprint f32 = fingerprint(build_osp(3, 1));
  CHECK(f32.odd_dim == 6);
  CHECK(f32.odd_module_split[1].parts == std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}});
  CHECK(f32 == expected_fingerprint(build_osp(3, 1).label()));

  StructureFingerprint f42 = fingerprint(build_osp(4, 1));
  CHECK(f42.even_dim == 9);
  CHECK(f42.odd_dim == 8);
  CHECK(f42.even_ideal_dims == std::vector<std::size_t>{3, 3, 3});
  CHECK(f42 == expected_fingerprint(build_osp(4, 1).label()));
  CHECK(fingerprint(build_osp(2, 1)) == expected_fingerprint(build_osp(2, 1).label()));
}

TEST_CASE("tensor squares of rank-two and rank-three algebras") {
  auto o5 = tensor_square_decompose(ClassicalFamily::o, 5);
  REQUIRE(o5.size() == 3);
  CHECK(o5[0].dim == 14);
  CHECK(o5[1].dim == 10);
  CHECK(o5[2].dim == 1);
  CHECK(o5[0].highest_weight == std::vector<long long>{2, 0});
  // Exterior square of the defining o(5)-module is the adjoint module.
  CHECK(o5[1].highest_weight == std::vector<long long>{0, 2});
  CHECK(o5[2].highest_weight == std::vector<long long>{0, 0});

  auto sp6 = tensor_square_decompose(ClassicalFamily::sp, 3);
  REQUIRE(sp6.size() == 3);
  CHECK(sp6[0].dim == 21);
  CHECK(sp6[1].dim == 14);
  CHECK(sp6[2].dim == 1);
  CHECK(sp6[0].highest_weight == std::vector<long long>{2, 0, 0});
  CHECK(sp6[1].highest_weight == std::vector<long long>{0, 1, 0});
}

TEST_CASE("symmetric square is a component of the tensor square") {
  for (auto [family, k] : {std::pair{ClassicalFamily::sp, std::size_t{2}}, std::pair{ClassicalFamily::o, std::size_t{3}}}) {
    Superalgebra alg = family == ClassicalFamily::sp ? build_sp(k) : build_o(k, OrthoForm::split);
    const std::size_t d = alg.basis().front().entries().rows();
    ModuleAction v = defining(alg);
    std::vector<ExactMatrix> diag;
    for (const auto& x : alg.basis()) diag.push_back(block_diagonal(x.entries(), x.entries()));
    ModuleAction sq = restrict_action(outer_tensor(v, v), diag);
    std::vector<Vector> sym;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) {
        Vector s(d * d);
        s[i * d + j] = s[i * d + j] + Scalar(1);
        s[j * d + i] = s[j * d + i] + Scalar(1);
        sym.push_back(s);
      }
    CHECK(is_invariant(sq.matrices, sym));
    bool found = false;
    for (const auto& c : decompose_module(sq)) {
      if (c.dim() != sym.size()) continue;
      std::vector<Vector> both = c.basis;
      both.insert(both.end(), sym.begin(), sym.end());
      found = found || ospd::oracles::gauss_rank(both) == sym.size();
    }
    // For sp the symmetric square is irreducible; for o it splits off the form.
    CHECK(found == (family == ClassicalFamily::sp));
  }
}

TEST_CASE("fingerprints of larger algebras") {
  for (auto [m, n] : {std::pair{5, 2}, std::pair{6, 1}, std::pair{7, 3}}) {
    Superalgebra s = build_osp(m, n);
    CAPTURE(s.label().str());
    CHECK(fingerprint(s) == expected_fingerprint(s.label()));
  }
  for (auto [m, n] : {std::pair{3, 2}, std::pair{4, 3}, std::pair{3, 1}}) {
    Superalgebra s = build_sl(m, n);
    CAPTURE(s.label().str());
    CHECK(fingerprint(s) == expected_fingerprint(s.label()));
  }
}
