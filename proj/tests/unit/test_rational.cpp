#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "infoloss/harness.hpp"
#include "infoloss/rational.hpp"

using infoloss::Rational;

TEST_CASE("construction reduces to canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(1, -2).str() == "-1/2");  // sign moves to the numerator
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
  CHECK(Rational(2) * Rational(1, 2) == Rational(1));
  CHECK(Rational(1) - Rational(1, 3) == Rational(2, 3));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(2, 3) <= Rational(2, 3));
  CHECK(Rational(5, 4) > Rational(1));
  CHECK(Rational(1, 2).is_positive());
  CHECK(Rational(-1, 2).is_negative());
  CHECK(Rational(0).is_zero());
  CHECK(Rational(3).is_integer());
  CHECK_FALSE(Rational(1, 3).is_integer());
}

TEST_CASE("parse accepts canonical forms and rejects junk") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("1") == Rational(1));
  CHECK(Rational::parse("-5/10") == Rational(-1, 2));
  CHECK(Rational::parse("+7") == Rational(7));

  CHECK_FALSE(Rational::parse("").has_value());
  CHECK_FALSE(Rational::parse("a").has_value());
  CHECK_FALSE(Rational::parse("1/").has_value());
  CHECK_FALSE(Rational::parse("/2").has_value());
  CHECK_FALSE(Rational::parse("1/0").has_value());
  CHECK_FALSE(Rational::parse("1.5").has_value());
  CHECK_FALSE(Rational::parse("1/ 2").has_value());
  CHECK_FALSE(Rational::parse("1/-2").has_value());
  CHECK_FALSE(Rational::parse("2/4x").has_value());
}

TEST_CASE("str and parse round-trip on random values") {
  infoloss::Rng rng(7, 0);
  for (int i = 0; i < 500; ++i) {
    const long num = static_cast<long>(rng.below(20001)) - 10000;
    const long den = 1 + static_cast<long>(rng.below(999));
    const Rational x(num, den);
    auto back = Rational::parse(x.str());
    REQUIRE(back.has_value());
    CHECK(*back == x);
  }
}

TEST_CASE("to_double on simple dyadics is exact") {
  CHECK(Rational(1, 2).to_double() == 0.5);
  CHECK(Rational(3, 4).to_double() == 0.75);
  CHECK(Rational(1).to_double() == 1.0);
  CHECK(Rational(0).to_double() == 0.0);
}
