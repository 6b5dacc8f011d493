#include "doctest.h"
#include "fixtures.hpp"
#include "recolle/recollement.hpp"

using namespace recolle;

namespace {

IdempotentRecollement rec_of(const AlgebraPtr& a, std::vector<size_t> e) {
  return build_recollement(a, e, default_depth(a));
}

}  // namespace

TEST_CASE("stratifying ideals of the three-recollement example") {
  auto a = fixtures::algebra("ex43");
  size_t depth = default_depth(a);
  auto s1 = stratifying_status(a, {0}, depth);
  CHECK(s1.certified());
  CHECK(s1.resolution == PdStatus::finite(0));
  auto s2 = stratifying_status(a, {1}, depth);
  CHECK(s2.certified());
  CHECK(s2.resolution.is_periodic());
  CHECK_THROWS_AS(stratifying_status(a, {}, depth), TrivialIdempotent);
  CHECK_THROWS_AS(stratifying_status(a, {0, 1}, depth), TrivialIdempotent);
  for (size_t i = 1; i <= 4; ++i) {
    auto t = tor_dim(ideal_quotient_module(a, {1}), ideal_quotient_module(opposite(a), {1}), i, 8);
    REQUIRE(t.has_value());
    CHECK(*t == 0);
  }
}

TEST_CASE("restriction flags of the three-recollement example") {
  auto a = fixtures::algebra("ex43");
  size_t depth = default_depth(a);
  auto r1 = rec_of(a, {0});
  CHECK(fingerprint(r1.b).dim == 2);
  CHECK(fingerprint(r1.c).dim == 1);
  CHECK(r1.b->num_vertices() + r1.c->num_vertices() == a->num_vertices());
  CHECK(r1.x.check());
  CHECK(r1.xtr.check());
  CHECK(r1.y.check());
  auto f1 = restriction_report(r1, depth);
  CHECK(f1.dminus.is_true());
  CHECK(f1.dbMod.is_true());
  CHECK(f1.dbmod.is_true());
  CHECK(f1.kbproj.is_false());
  CHECK(f1.jstar_compact.is_false());
  CHECK(f1.consistent());

  auto r2 = rec_of(a, {1});
  CHECK(fingerprint(r2.b).dim == 1);
  CHECK(fingerprint(r2.c).loewy == std::vector<size_t>{1, 1});
  auto f2 = restriction_report(r2, depth);
  CHECK(f2.dminus.is_false());
  CHECK(f2.dbMod.is_false());
  CHECK(f2.dbmod.is_false());
  CHECK(f2.kbproj.is_false());
  CHECK(f2.pd_left_c == PdStatus::finite(0));
  // Ext^k(S_1, A) is one-dimensional for every k >= 1
  CHECK(ishriek_compact(r2, depth).is_false());
  for (size_t k = 1; k <= 4; ++k) CHECK(ext_dim(ideal_quotient_module(a, {1}), regular_module(a), k, 8) == 1);
}

TEST_CASE("jordan-holder counterexample recollements") {
  auto a = fixtures::algebra("jh7");
  auto r1 = rec_of(a, {0});
  auto b1 = fingerprint(r1.b), c1 = fingerprint(r1.c);
  CHECK(b1.dim == 1);
  CHECK(c1.dim == 4);
  CHECK(c1.local == "True");
  CHECK_FALSE(c1.commutative);
  auto r2 = rec_of(a, {1});
  auto b2 = fingerprint(r2.b), c2 = fingerprint(r2.c);
  CHECK(b2 == c2);
  CHECK(b2.dim == 2);
  CHECK(b2.commutative);
}

TEST_CASE("derived simple at the bounded-above level") {
  auto a = fixtures::algebra("ex53");
  size_t depth = default_depth(a);
  for (size_t v : {0, 1}) {
    auto r = rec_of(a, {v});
    auto c = fingerprint(r.c);
    CHECK(c.dim == 4);
    CHECK(c.local == "True");
    CHECK_FALSE(c.commutative);
    auto f = restriction_report(r, depth);
    CHECK(f.dminus.is_false());
    CHECK(f.dbmod.is_false());
    CHECK(f.kbproj.is_false());
    CHECK(f.pd_left_c.is_periodic());
  }
}

TEST_CASE("finite global dimension restricts everywhere") {
  for (const char* name : {"qh3", "a2", "kxk"}) {
    auto a = fixtures::algebra(name);
    size_t depth = default_depth(a);
    size_t built = 0;
    for (const auto& e : proper_vertex_subsets(a)) {
      auto st = stratifying_status(a, e, depth);
      if (!st.certified()) {
        CHECK(st.kind == StratStatus::Kind::Refuted);
        continue;
      }
      auto r = rec_of(a, e);
      ++built;
      auto f = restriction_report(r, depth);
      CHECK(f.dminus.is_true());
      CHECK(f.dbMod.is_true());
      CHECK(f.dbmod.is_true());
      CHECK(f.kbproj.is_true());
      CHECK(f.ishriek_compact.is_true());
    }
    CHECK(built >= 1);
  }
}

TEST_CASE("duals of projective bimodules") {
  auto a = fixtures::algebra("ex43");
  auto r = rec_of(a, {1});
  auto d = dual_right(r.x, 8);
  REQUIRE(d.dual.has_value());
  CHECK(d.cohomology == std::map<int, size_t>{{0, 3}});
  CHECK(d.dual->dim() == r.xtr.dim());
  CHECK(d.dual->check());
  CHECK(is_isomorphic(d.dual->as_right(), r.xtr.as_right()).verdict.is_true());
  CHECK(is_isomorphic(d.dual->as_left(), r.xtr.as_left()).verdict.is_true());
  auto back = dual_left(*d.dual, 8);
  REQUIRE(back.dual.has_value());
  CHECK(is_isomorphic(back.dual->as_right(), r.x.as_right()).verdict.is_true());
  auto none = dual_right(r.xtr, 8);
  CHECK(none.status.is_periodic());
  CHECK_FALSE(none.dual.has_value());
}

TEST_CASE("canonical triangle of the cone recollement") {
  auto a = fixtures::algebra("ex43");
  auto m = two_term(a, 1, 0, fixtures::elem(a, "alpha"));
  auto tp = stalk(a, {0, 0});
  auto reg = stalk(a, {0, 1});
  ChainMap g = zero_map(reg, tp);
  g.comps[0].at(0, 0) = fixtures::elem(a, "e1");
  g.comps[0].at(1, 1) = fixtures::elem(a, "alpha");
  auto chk = verify_canonical_triangle(a, m, tp, g, shift(m, -1));
  CHECK(chk.ok);
  CHECK(chk.candidate_iso);
  CHECK(chk.t_orthogonal);
  CHECK(chk.cone_orthogonal);
  auto e = end_algebra(tp);
  auto fp = fingerprint(e.algebra);
  CHECK(fp.dim == 4);
  CHECK(fp.r == 1);
  CHECK(num_simples(e.algebra) == 1);

  CHECK_FALSE(verify_canonical_triangle(a, m, tp, zero_map(reg, tp), shift(m, -1)).ok);

  // idempotent case: AeA -> A -> A/AeA for e = e1, where A/AeA is P2
  auto p1 = stalk(a, {0});
  auto p2 = stalk(a, {1});
  ChainMap proj = zero_map(reg, p2);
  proj.comps[0].at(0, 1) = fixtures::elem(a, "e2");
  auto idem = verify_canonical_triangle(a, p1, p2, proj);
  CHECK(idem.ok);
  CHECK(verify_canonical_triangle(a, p1, p2, proj, p1).ok);
}
