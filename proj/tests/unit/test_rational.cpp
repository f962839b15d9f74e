#include "fracinv/rational.hpp"

#include <doctest.h>

using namespace fracinv;

TEST_CASE("parse_rational accepts p and p/q and canonicalizes") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("5") == Rational(5));
  CHECK(parse_rational("0/7") == Rational(0));
  CHECK(parse_rational("007/1") == Rational(7));
  CHECK(parse_rational("-0") == Rational(0));
}

TEST_CASE("parse_rational rejects junk") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1 /2"), std::invalid_argument);
}

TEST_CASE("rat_str prints canonical form and round-trips") {
  CHECK(rat_str(Rational(3, 4)) == "3/4");
  CHECK(rat_str(Rational(-3, 4)) == "-3/4");
  CHECK(rat_str(Rational(7)) == "7");
  CHECK(rat_str(Rational(0)) == "0");
  for (const char* s : {"2/3", "-11/7", "0", "12345678901234567890/7"})
    CHECK(rat_str(parse_rational(s)) == s);
}

TEST_CASE("rat_double and rat_from_double") {
  CHECK(rat_double(Rational(1, 2)) == 0.5);
  CHECK(rat_from_double(0.5) == Rational(1, 2));
  CHECK(rat_from_double(-0.75) == Rational(-3, 4));
  // 0.1 is not a dyadic rational; the conversion is exact in binary
  Rational tenth = rat_from_double(0.1);
  CHECK(tenth != Rational(1, 10));
  CHECK(rat_double(tenth) == 0.1);
}

TEST_CASE("snap_rational recovers simple fractions within tolerance") {
  auto r = snap_rational(0.3333333333333333, 1e-9, 1000000);
  REQUIRE(r.has_value());
  CHECK(*r == Rational(1, 3));
  r = snap_rational(-2.0000000000000004, 1e-9, 1000000);
  REQUIRE(r.has_value());
  CHECK(*r == Rational(-2));
  r = snap_rational(0.625, 1e-12, 1000);
  REQUIRE(r.has_value());
  CHECK(*r == Rational(5, 8));
}

TEST_CASE("snap_rational refuses when nothing simple is close enough") {
  // sqrt(2) has no small-denominator approximation at 1e-12
  CHECK_FALSE(snap_rational(1.4142135623730951, 1e-12, 1000000).has_value());
  // denominator cap respected: 1/1000001 snaps only to 0 at loose tol, not at tight tol
  CHECK_FALSE(snap_rational(1.0 / 1000001, 1e-12, 1000).has_value());
}
