#include "doctest.h"
#include "fixtures.hpp"
#include "recolle/ladder.hpp"

using namespace recolle;

namespace {

IdempotentRecollement rec_of(const AlgebraPtr& a, std::vector<size_t> e) {
  return build_recollement(a, e, default_depth(a));
}

std::vector<std::string> verdicts(const std::vector<LadderStep>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.verdict.name());
  return out;
}

using Names = std::vector<std::string>;

}  // namespace

TEST_CASE("one-step extensions") {
  auto a = fixtures::algebra("ex43");
  size_t d = default_depth(a);
  auto r1 = rec_of(a, {0});
  auto r2 = rec_of(a, {1});
  CHECK(extend_down(r1, d).is_true());
  CHECK(extend_down(r2, d).is_false());
  CHECK(extend_up(r1, d).is_true());
  CHECK(extend_up(r2, d).is_true());

  auto b = fixtures::algebra("ex54");
  CHECK(extend_down(rec_of(b, {0}), default_depth(b)).is_true());

  auto c = fixtures::algebra("ex53");
  CHECK(extend_up(rec_of(c, {0}), default_depth(c)).is_false());

  for (auto name : {"ex43", "ex53", "ex54", "jh7", "qh3", "a2"}) {
    auto x = fixtures::algebra(name);
    size_t dx = default_depth(x);
    for (const auto& e : proper_vertex_subsets(x)) {
      if (!stratifying_status(x, e, dx).certified()) continue;
      auto rec = rec_of(x, e);
      CHECK(extend_down(rec, dx).value == restriction_report(rec, dx).dminus.value);
    }
  }
}

TEST_CASE("derived duals") {
  auto a = fixtures::algebra("ex43");
  size_t d = default_depth(a);
  auto r1 = rec_of(a, {0});
  auto dx = derived_dual(r1.x, Side::Right, d);
  REQUIRE(dx.dual);
  CHECK(dx.dual->dim() == r1.xtr.dim());
  CHECK(dx.dual->left == a);
  CHECK(dx.dual->right == r1.c);
  auto back = derived_dual(*dx.dual, Side::Left, d);
  REQUIRE(back.dual);
  CHECK(back.dual->dim() == r1.x.dim());

  auto r2 = rec_of(a, {1});
  CHECK_THROWS_AS(derived_dual(r2.y, Side::Right, d), NotPerfect);
  CHECK_THROWS_AS(derived_dual(r2.xtr, Side::Right, d), NotPerfect);
}

TEST_CASE("ladder of the three-recollement example") {
  auto a = fixtures::algebra("ex43");
  size_t d = default_depth(a);
  auto lr = ladder_heights(rec_of(a, {0}), 4, d);
  CHECK(verdicts(lr.up_steps) == Names{"True", "False"});
  CHECK(verdicts(lr.down_steps) == Names{"True", "False"});
  CHECK(lr.height_lower_bound == 3);
  CHECK(lr.complete_up.is_true());
  CHECK(lr.complete_down.is_true());
  REQUIRE(lr.down_steps[0].dual);
  CHECK(lr.down_steps[0].status == PdStatus::finite(0));
  CHECK(lr.down_steps[1].status.is_periodic());

  // the same ladder seen from e2; its top end is not representable by a bimodule
  auto l2 = ladder_heights(rec_of(a, {1}), 4, d);
  CHECK(l2.height_lower_bound == 3);
  CHECK(verdicts(l2.down_steps) == Names{"False"});
  CHECK(l2.complete_down.is_true());
  CHECK(l2.up_steps.size() == 3);
  CHECK(l2.up_steps[2].verdict.is_unknown());

  CHECK_THROWS_AS(ladder_heights(rec_of(a, {0}), 0, d), DimError);
}

TEST_CASE("ladder heights of the simplicity examples") {
  auto b = fixtures::algebra("ex54");
  auto lb = ladder_heights(rec_of(b, {0}), 3, default_depth(b));
  CHECK(verdicts(lb.down_steps) == Names{"True", "False"});
  CHECK(verdicts(lb.up_steps) == Names{"False"});
  CHECK(lb.height_lower_bound == 2);
  CHECK(lb.complete_up.is_true());
  CHECK(lb.complete_down.is_true());

  auto c = fixtures::algebra("ex53");
  for (size_t v : {0, 1}) {
    auto lc = ladder_heights(rec_of(c, {v}), 3, default_depth(c));
    CHECK(lc.height_lower_bound == 1);
    CHECK(lc.complete_up.is_true());
    CHECK(lc.complete_down.is_true());
  }

  auto j = fixtures::algebra("jh7");
  auto lj = ladder_heights(rec_of(j, {0}), 3, default_depth(j));
  CHECK(verdicts(lj.up_steps) == Names{"False"});
  CHECK(verdicts(lj.down_steps) == Names{"False"});
  CHECK(lj.height_lower_bound == 1);
}

TEST_CASE("finite global dimension gives unbounded ladders") {
  for (auto name : {"qh3", "a2", "kxk"}) {
    auto a = fixtures::algebra(name);
    size_t d = default_depth(a);
    for (const auto& e : proper_vertex_subsets(a)) {
      if (!stratifying_status(a, e, d).certified()) continue;
      for (size_t m = 1; m <= 4; ++m) {
        auto lr = ladder_heights(rec_of(a, e), m, d);
        CHECK(lr.up_steps.size() == m);
        CHECK(lr.down_steps.size() == m);
        CHECK(lr.height_lower_bound == 2 * m + 1);
        CHECK(lr.complete_up.is_false());
        CHECK(lr.complete_down.is_false());
      }
    }
  }
  // monotone in m
  auto a = fixtures::algebra("ex43");
  auto rec = rec_of(a, {0});
  size_t prev = 0;
  for (size_t m = 1; m <= 3; ++m) {
    size_t h = ladder_heights(rec, m, default_depth(a)).height_lower_bound;
    CHECK(h >= prev);
    prev = h;
  }
}

TEST_CASE("nakayama functor") {
  auto a = fixtures::algebra("a2");
  size_t d = default_depth(a);
  auto p1 = stalk(a, {0}), p2 = stalk(a, {1});
  CHECK(kb_isomorphic(nakayama(a, p1, d), p2).is_true());
  auto s2 = resolution_complex(min_resolution(simple_module(a, 1), d));
  CHECK(kb_isomorphic(nakayama(a, p2, d), s2).is_true());
  CHECK(kb_isomorphic(nakayama(a, s2, d), shift(p1, 1)).is_true());

  auto q = fixtures::algebra("qh3");
  size_t dq = default_depth(q);
  auto i2 = resolution_complex(min_resolution(injective_module(q, 1), dq));
  auto nu = nakayama(q, stalk(q, {1}), dq);
  CHECK(kb_isomorphic(nu, i2).is_true());
  CHECK(nu.amplitude() == 2);
  CHECK(total_cohomology_dims(nu) == std::map<int, size_t>{{-2, 0}, {-1, 0}, {0, injective_module(q, 1).dim()}});

  auto k = fixtures::algebra("kxk");
  auto pk = stalk(k, {0});
  CHECK(kb_isomorphic(nakayama(k, pk, default_depth(k)), pk).is_true());

  auto e = fixtures::algebra("ex43");
  CHECK_THROWS_AS(nakayama(e, stalk(e, {0}), default_depth(e)), InfiniteGlobalDimension);
}

TEST_CASE("simplicity reports") {
  auto c = fixtures::algebra("ex53");
  auto rc = simplicity_report(c, {});
  CHECK(rc.dmod.kind == LevelVerdict::Kind::NotSimple);
  CHECK(rc.dminus.kind == LevelVerdict::Kind::NoWitnessFound);
  CHECK(rc.kb.kind == LevelVerdict::Kind::NoWitnessFound);
  CHECK(rc.witnesses.size() == 2);

  auto b = fixtures::algebra("ex54");
  auto rb = simplicity_report(b, {});
  CHECK(rb.dmod.kind == LevelVerdict::Kind::NotSimple);
  CHECK(rb.dminus.kind == LevelVerdict::Kind::NotSimple);
  CHECK(rb.kb.kind == LevelVerdict::Kind::NoWitnessFound);
  CHECK(rb.best_height == 2);

  for (auto name : {"k", "dual_numbers", "local4"}) {
    auto r = simplicity_report(fixtures::algebra(name), {});
    CHECK(r.dmod.kind == LevelVerdict::Kind::SimpleCertified);
    CHECK(r.dminus.kind == LevelVerdict::Kind::SimpleCertified);
    CHECK(r.kb.kind == LevelVerdict::Kind::SimpleCertified);
  }

  auto a = fixtures::algebra("ex43");
  auto ra = simplicity_report(a, {});
  CHECK(ra.kb.kind == LevelVerdict::Kind::NotSimple);
  CHECK(std::string(ra.kb.name()) == "NotSimple");
}
