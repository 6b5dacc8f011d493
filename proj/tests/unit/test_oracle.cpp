#include "doctest.h"
#include "fixtures.hpp"
#include "recolle/kbproj.hpp"
#include "recolle/oracle.hpp"

using namespace recolle;

namespace {

std::vector<ProjComplex> sample(const AlgebraPtr& a, const char* arrow) {
  auto x = two_term(a, 1, 0, fixtures::elem(a, arrow));
  return {stalk(a, {0}), stalk(a, {1}), x, shift(x, 1), direct_sum(stalk(a, {1}, -1), stalk(a, {0}))};
}

}  // namespace

TEST_CASE("Hom in the homotopy category agrees with enumeration over F2") {
  size_t compared = 0, nonzero = 0;
  for (auto [name, arrow] : {std::pair{"ex43", "alpha"}, {"ex54", "alpha"}, {"jh7", "beta"}, {"qh3", "beta"}}) {
    auto a = fixtures::algebra(name, fixtures::F2());
    auto xs = sample(a, arrow);
    for (const auto& x : xs)
      for (const auto& y : xs)
        for (int n = -2; n <= 2; ++n) {
          CAPTURE(name);
          CAPTURE(x.str());
          CAPTURE(y.str());
          CAPTURE(n);
          size_t expect = 0;
          try {
            expect = hom_bruteforce(x, y, n);
          } catch (const CapTooLarge&) {
            continue;
          }
          CHECK(hom_dim(x, y, n).dim == expect);
          ++compared;
          if (expect) ++nonzero;
        }
  }
  CHECK(compared >= 450);
  CHECK(nonzero >= 50);
}

TEST_CASE("brute force rejects other fields and large inputs") {
  auto a = fixtures::algebra("ex43");
  CHECK_THROWS_AS(hom_bruteforce(stalk(a, {0}), stalk(a, {0}), 0), FieldMismatch);
  auto b = fixtures::algebra("jh7", fixtures::F2());
  auto big = stalk(b, {0, 0, 1, 1});
  CHECK_THROWS_AS(hom_bruteforce(big, big, 0, 1024), CapTooLarge);
}
