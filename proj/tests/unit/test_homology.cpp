#include "doctest.h"
#include "fixtures.hpp"
#include "recolle/homology.hpp"
#include "recolle/oracle.hpp"

using namespace recolle;
using Terms = std::vector<std::vector<size_t>>;

namespace {

Terms multiplicities(const ResolutionReport& r, size_t n) {
  Terms t;
  for (size_t k = 0; k < n; ++k) t.push_back(r.multiplicity(k));
  return t;
}

void check_resolution(const ResolutionReport& r) {
  for (size_t k = 0; k + 1 < r.maps.size(); ++k) CHECK((r.maps[k] * r.maps[k + 1]).is_zero());
  for (const auto& d : r.maps) CHECK(d.is_radical());
  if (!r.maps.empty()) CHECK((r.augmentation * to_linear(r.maps[0])).is_zero());
}

}  // namespace

TEST_CASE("projective covers") {
  auto a = fixtures::algebra("ex43");
  CHECK(projective_cover(simple_module(a, 0)).vertices == std::vector<size_t>{0});
  auto pc = projective_cover(projective_module(a, 1));
  CHECK(pc.vertices == std::vector<size_t>{1});
  CHECK(rank(pc.map) == 2);
  auto j = fixtures::algebra("jh7");
  CHECK(projective_cover(ideal_quotient_module(j, {1})).vertices == std::vector<size_t>{0});
  CHECK_THROWS_AS(projective_cover(zero_module(a)), ZeroModule);
}

TEST_CASE("resolutions from the examples") {
  auto a = fixtures::algebra("ex43");
  auto r = min_resolution(ideal_quotient_module(a, {1}), default_depth(a));
  CHECK(r.status == PdStatus::periodic(1, 1));
  CHECK(multiplicities(min_resolution(r.module, 3, false), 3) == Terms{{1, 0}, {0, 1}, {0, 1}});
  REQUIRE(r.period_certificate);
  check_resolution(r);
  CHECK(min_resolution(ideal_quotient_module(a, {0}), 10).status == PdStatus::finite(0));

  auto j = fixtures::algebra("jh7");
  auto rj = min_resolution(ideal_quotient_module(j, {1}), default_depth(j));
  CHECK(rj.status == PdStatus::periodic(1, 1));
  CHECK(multiplicities(min_resolution(rj.module, 3, false), 3) == Terms{{1, 0}, {0, 2}, {0, 2}});
  check_resolution(rj);
  auto rj1 = min_resolution(ideal_quotient_module(j, {0}), default_depth(j));
  CHECK(multiplicities(min_resolution(rj1.module, 4, false), 4) == Terms{{0, 1}, {1, 0}, {1, 0}, {1, 0}});
  CHECK(rj1.status.is_periodic());

  auto b = fixtures::algebra("ex53");
  auto rb = min_resolution(ideal_quotient_module(b, {0}), default_depth(b));
  CHECK(multiplicities(min_resolution(rb.module, 4, false), 4) == Terms{{0, 1}, {1, 0}, {1, 0}, {1, 0}});
  CHECK(rb.status == PdStatus::periodic(1, 1));
  check_resolution(rb);
}

TEST_CASE("projective and global dimension") {
  auto a = fixtures::algebra("ex43");
  CHECK(pd(projective_module(a, 0), 5) == PdStatus::finite(0));
  CHECK(pd(simple_module(a, 0), 10).is_periodic());
  auto q = fixtures::algebra("qh3");
  auto s2 = pd(simple_module(q, 1), 10);
  CHECK(s2.is_finite());
  CHECK(s2.n <= 2);
  CHECK(gldim(q, 10).str() == "Finite(2)");
  CHECK(gldim(fixtures::algebra("jh7"), 24).str() == "Infinite");
  CHECK(gldim(fixtures::algebra("k"), 6).str() == "Finite(0)");
  CHECK(gldim(fixtures::algebra("a2"), 6).str() == "Finite(1)");
  CHECK(pd(simple_module(q, 0), 3) == PdStatus::finite(1));
  CHECK(pd(simple_module(a, 0), 1) == PdStatus::exceeded(1));
}

TEST_CASE("ext and tor") {
  auto d = fixtures::algebra("dual_numbers");
  auto s = simple_module(d, 0);
  CHECK(ext_dim(s, s, 0, 10) == 1);
  CHECK(ext_dim(s, s, 1, 10) == 1);
  auto dop = opposite(d);
  auto sl = simple_module(dop, 0);
  for (size_t i = 0; i < 5; ++i) {
    CHECK(tor_dim(s, sl, i, 10) == 1);
    CHECK(bar_tor(s, sl, i) == 1);
  }
  auto a = fixtures::algebra("ex43");
  auto op = opposite(a);
  auto b = ideal_quotient_module(a, {0});
  auto bl = ideal_quotient_module(op, {0});
  CHECK(tor_dim(b, bl, 0, 10) == 2);
  for (size_t i = 1; i < 5; ++i) CHECK(tor_dim(b, bl, i, 10) == 0);
  auto reg = regular_module(a);
  for (size_t i = 1; i < 5; ++i) CHECK(ext_dim(b, reg, i, 10) == 0);
  CHECK(ext_dim(b, reg, 0, 10) == hom_space(b, reg).size());
  CHECK_FALSE(ext_dim(b, reg, 20, 10).has_value());
}

TEST_CASE("tor agrees with the bar oracle") {
  for (const char* name : {"ex43", "qh3", "a2", "jh7", "ex54"}) {
    auto a = fixtures::algebra(name, fixtures::F2());
    if (a->dim() > 10) continue;
    auto op = opposite(a);
    for (size_t u = 0; u < a->num_vertices(); ++u)
      for (size_t v = 0; v < a->num_vertices(); ++v) {
        auto m = simple_module(a, u);
        auto n = simple_module(op, v);
        for (size_t i = 0; i <= 3; ++i) CHECK_MESSAGE(tor_dim(m, n, i, 10) == bar_tor(m, n, i), name);
      }
    for (size_t e = 0; e < a->num_vertices(); ++e) {
      auto m = ideal_quotient_module(a, {e});
      auto n = ideal_quotient_module(op, {e});
      for (size_t i = 0; i <= 3; ++i) CHECK_MESSAGE(tor_dim(m, n, i, 10) == bar_tor(m, n, i), name);
    }
  }
}

TEST_CASE("lifting module maps") {
  auto a = fixtures::algebra("ex43");
  auto m = ideal_quotient_module(a, {1});
  auto r = min_resolution(m, 4, false);
  auto id = lift_action(r, Mat::identity(a->field, m.dim()));
  REQUIRE(id.size() == r.terms.size());
  for (size_t k = 0; k < id.size(); ++k) {
    if (k > 0) CHECK(r.maps[k - 1] * id[k] == id[k - 1] * r.maps[k - 1]);
  }
  auto zero = lift_action(r, Mat(a->field, m.dim(), m.dim()));
  for (const auto& z : zero) CHECK(z.is_zero());
  auto p2 = projective_module(a, 1);
  auto rp = min_resolution(p2, 3);
  auto end = hom_space(p2, p2);
  for (const auto& h : end) {
    auto l = lift_action(rp, h.matrix);
    REQUIRE(l.size() == 1);
    CHECK(rp.augmentation * to_linear(l[0]) == h.matrix * rp.augmentation);
  }
}
