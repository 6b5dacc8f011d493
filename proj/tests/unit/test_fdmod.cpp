#include "doctest.h"
#include "fixtures.hpp"
#include "recolle/fdmod.hpp"

using namespace recolle;
using Layers = std::vector<std::vector<size_t>>;


TEST_CASE("simples and projectives") {
  auto a = fixtures::algebra("ex43");
  auto s1 = simple_module(a, 0);
  CHECK(s1.dim() == 1);
  CHECK(s1.dim_vector() == std::vector<size_t>{1, 0});
  CHECK(s1.check_module_axioms());
  auto p1 = projective_module(a, 0);
  CHECK(p1.dim() == 2);
  CHECK(p1.check_module_axioms());
  CHECK(radical_filtration(p1) == Layers{{1, 0}, {0, 1}});
  auto p2 = projective_module(a, 1);
  CHECK(p2.check_module_axioms());
  CHECK(radical_filtration(p2) == Layers{{0, 1}, {0, 1}});
  auto c = cartan_matrix(a);
  for (size_t v = 0; v < 2; ++v) {
    int64_t row = 0;
    for (auto x : c[v]) row += x;
    CHECK(projective_module(a, v).dim() == static_cast<size_t>(row));
  }
  auto kk = fixtures::algebra("kxk");
  CHECK(simple_module(kk, 1).dim() == 1);
}

TEST_CASE("displayed composition series") {
  auto j = fixtures::algebra("jh7");
  CHECK(radical_filtration(projective_module(j, 1)) == Layers{{0, 1}, {1, 0}, {0, 1}, {1, 0}});
  CHECK(radical_filtration(projective_module(j, 0)) == Layers{{1, 0}, {1, 1}, {1, 1}, {1, 0}});
  auto b = fixtures::algebra("ex53");
  CHECK(radical_filtration(projective_module(b, 0)) == Layers{{1, 0}, {1, 1}, {1, 2}, {1, 1}});
  CHECK(radical_filtration(projective_module(b, 1)) == Layers{{0, 1}, {1, 1}, {0, 1}, {1, 1}});
  auto semi = direct_sum(simple_module(b, 0), simple_module(b, 1));
  CHECK(radical_filtration(semi) == Layers{{1, 1}});
}

TEST_CASE("hom spaces") {
  auto a = fixtures::algebra("ex43");
  auto p1 = projective_module(a, 0), p2 = projective_module(a, 1);
  auto s1 = simple_module(a, 0), s2 = simple_module(a, 1);
  CHECK(hom_space(p2, p2).size() == 2);
  CHECK(hom_space(s1, s2).empty());
  CHECK(hom_space(p1, s1).size() == 1);
  CHECK(hom_space(p2, p1).size() == 1);
  CHECK(hom_space(p1, p2).empty());
  for (const auto& h : hom_space(p2, p2)) CHECK(is_hom(p2, p2, h.matrix));
  auto other = fixtures::algebra("jh7");
  CHECK_THROWS_AS(hom_space(p1, projective_module(other, 0)), AlgebraMismatch);
}

TEST_CASE("submodules, quotients and duals") {
  auto a = fixtures::algebra("ex43");
  auto p2 = projective_module(a, 1);
  Mat rad = radical_submodule_basis(p2);
  CHECK(rad.cols() == 1);
  Mat inc;
  auto sub = submodule(p2, rad, &inc);
  CHECK(sub.check_module_axioms());
  CHECK(is_hom(sub, p2, inc));
  Mat proj;
  auto top = quotient(p2, rad, &proj);
  CHECK(top.dim() == 1);
  CHECK(is_hom(p2, top, proj));
  CHECK(is_isomorphic(top, simple_module(a, 1)).verdict.is_true());
  auto op = opposite(a);
  auto d = dual(p2, op);
  CHECK(d.check_module_axioms());
  CHECK(radical_filtration(d) == Layers{{0, 1}, {0, 1}});
}

TEST_CASE("isomorphism testing") {
  auto a = fixtures::algebra("ex43");
  auto p1 = projective_module(a, 0), p2 = projective_module(a, 1);
  auto r = is_isomorphic(p1, p1);
  CHECK(r.verdict.is_true());
  REQUIRE(r.inverse);
  CHECK(*r.iso * *r.inverse == Mat::identity(a->field, 2));
  CHECK(is_isomorphic(p1, p2).verdict.is_false());
  auto q1 = ideal_quotient_module(a, {0});
  CHECK(q1.dim() == 2);
  auto iso = is_isomorphic(q1, p2);
  CHECK(iso.verdict.is_true());
  REQUIRE(iso.iso);
  CHECK(is_hom(q1, p2, *iso.iso));
  CHECK(is_hom(p2, q1, *iso.inverse));
  // same dimension vector and layers, different modules: S2 + S2 + S1 vs P2 + S1 fails on layers
  auto x = direct_sum(simple_module(a, 1), direct_sum(simple_module(a, 1), simple_module(a, 0)));
  CHECK(is_isomorphic(x, direct_sum(p2, simple_module(a, 0))).verdict.is_false());
  // over F2 the exhaustive branch decides
  auto b = fixtures::algebra("ex43", fixtures::F2());
  auto m = direct_sum(projective_module(b, 1), simple_module(b, 1));
  auto n = direct_sum(simple_module(b, 1), projective_module(b, 1));
  CHECK(is_isomorphic(m, n, 7, 0).verdict.is_true());
}

TEST_CASE("endomorphism-origin algebra modules") {
  auto a = fixtures::algebra("local4");
  auto e = corner(fixtures::algebra("jh7"), {0});
  auto p = projective_module(e, 0);
  CHECK(p.dim() == 4);
  CHECK(radical_filtration(p) == Layers{{1}, {2}, {1}});
  CHECK(hom_space(p, p).size() == 4);
  CHECK(simple_module(a, 0).dim() == 1);
}
