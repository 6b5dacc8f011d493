#include "doctest.h"
#include "recolle/exactla.hpp"

using namespace recolle;

TEST_CASE("rational fast path and overflow") {
  Rational a(1, 3), b(1, 6);
  CHECK((a + b) == Rational(1, 2));
  CHECK((a * b) == Rational(1, 18));
  CHECK((a / b) == Rational(2));
  Rational big(INT64_MAX);
  Rational s = big + big;
  CHECK(!s.is_small());
  CHECK((s - big) == big);
  CHECK((s - big).is_small());
  CHECK(Rational(-4, -8) == Rational(1, 2));
}

TEST_CASE("prime field arithmetic") {
  Field f = Field::prime(5);
  CHECK(f.mul(f.from_int(3), f.inv(f.from_int(3))) == Scalar(1));
  CHECK(f.parse("1/2") == f.from_int(3));
  CHECK(f.from_int(-1) == Scalar(4));
  CHECK_THROWS_AS(Field::prime(6), DimError);
}

TEST_CASE("rank") {
  Field q = Field::rationals();
  CHECK(rank(Mat::identity(q, 2)) == 2);
  CHECK(rank(Mat(q, 3, 4)) == 0);
  CHECK(rank(Mat::from_ints(q, {{1, 2}, {2, 4}})) == 1);
  Mat m = Mat::from_ints(q, {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
  CHECK(rank(m) == rank(m.transpose()));
}

TEST_CASE("kernel basis") {
  Field q = Field::rationals();
  CHECK(kernel_basis(Mat::identity(q, 3)).cols() == 0);
  CHECK(kernel_basis(Mat(q, 2, 3)).cols() == 3);
  Field f2 = Field::prime(2);
  Mat k = kernel_basis(Mat::from_ints(f2, {{1, 1}}));
  REQUIRE(k.cols() == 1);
  CHECK(k.at(0, 0) == Scalar(1));
  CHECK(k.at(1, 0) == Scalar(1));
  Mat m = Mat::from_ints(q, {{1, 2, 3, 4}, {2, 4, 6, 9}});
  Mat kb = kernel_basis(m);
  CHECK(kb.cols() + rank(m) == m.cols());
  CHECK((m * kb).is_zero());
}

TEST_CASE("solve") {
  Field q = Field::rationals();
  Mat b = Mat::from_ints(q, {{3}, {4}});
  CHECK(*solve(Mat::identity(q, 2), b) == b);
  CHECK(!solve(Mat(q, 2, 2), b).has_value());
  auto x = solve(Mat::from_ints(q, {{2}}), Mat::from_ints(q, {{1}}));
  REQUIRE(x);
  CHECK(x->at(0, 0) == Rational(1, 2));
  CHECK_THROWS_AS(solve(Mat(q, 2, 2), Mat(q, 3, 1)), DimError);
  Mat a = Mat::from_ints(q, {{1, 1, 0}, {0, 1, 1}});
  Mat rhs = Mat::from_ints(q, {{2}, {5}});
  auto y = solve(a, rhs);
  REQUIRE(y);
  CHECK(a * *y == rhs);
}

TEST_CASE("quotient dimension") {
  Field q = Field::rationals();
  Mat space = Mat::identity(q, 3);
  CHECK(quotient_dim(space, space) == 0);
  CHECK(quotient_dim(space, Mat(q, 3, 0)) == 3);
  CHECK(quotient_dim(space, Mat::from_ints(q, {{1}, {1}, {0}})) == 2);
  Mat line = Mat::from_ints(q, {{1}, {0}, {0}});
  CHECK_THROWS_AS(quotient_dim(line, Mat::from_ints(q, {{0}, {1}, {0}})), ContainmentError);
}

TEST_CASE("inverse and fast rank mod p") {
  Field f = Field::prime(7);
  Mat m = Mat::from_ints(f, {{1, 2}, {3, 4}});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == Mat::identity(f, 2));
  std::vector<uint32_t> w{1, 2, 2, 4};
  CHECK(rank_mod_p(w, 2, 2, 7) == 1);
}
