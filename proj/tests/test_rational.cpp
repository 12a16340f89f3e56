#include <doctest.h>

#include <random>

#include "jfactor/rational.hpp"

using namespace jfactor;

TEST_CASE("rationals normalize on construction") {
  CHECK(num(rat(2, 4)) == 1);
  CHECK(den(rat(2, 4)) == 2);
  CHECK(num(rat(-3, 6)) == -1);
  CHECK(den(rat(-3, 6)) == 2);
  CHECK(rat(0, 7) == 0);
  CHECK(den(rat(0, 7)) == 1);
  CHECK(den(Rational()) == 1);
  CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> numerator(-50, 50);
  std::uniform_int_distribution<int> denominator(1, 50);
  for (int i = 0; i < 500; ++i) {
    const Rational a = rat(numerator(rng), denominator(rng));
    Rational b = rat(numerator(rng), denominator(rng));
    CHECK((a + b) - b == a);
    if (b == 0) b = rat(1, 3);
    CHECK((a * b) / b == a);
  }
}

TEST_CASE("fraction strings round-trip") {
  CHECK(to_fraction_string(rat(2, 3)) == "2/3");
  CHECK(to_fraction_string(rat(-1, 2)) == "-1/2");
  CHECK(to_fraction_string(rat(4, 2)) == "2");
  CHECK(parse_rational("7/21") == rat(1, 3));
  CHECK(parse_rational("-5") == rat(-5, 1));
  CHECK(parse_rational("0.125") == rat(1, 8));
  CHECK(parse_rational("-2.5e-3") == rat(-1, 400));
  CHECK(parse_rational("1e2") == rat(100, 1));
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("decimal rendering carries 17 significant digits") {
  CHECK(to_decimal_string(rat(1, 2)) == "0.5");
  CHECK(rational_from_decimal(to_decimal_string(rat(1, 8))) == rat(1, 8));
  // 1/3 is not dyadic; the reread value must match the nearest double.
  const Rational reread = rational_from_decimal(to_decimal_string(rat(1, 3)));
  CHECK(to_double(reread) == to_double(rat(1, 3)));
  CHECK(reread != rat(1, 3));
}

TEST_CASE("big integers survive deep products") {
  Rational r(1);
  for (int i = 0; i < 40; ++i) r *= rat(1, 10);
  CHECK(den(r) == boost::multiprecision::pow(BigInt(10), 40));
  CHECK(to_fraction_string(r * boost::multiprecision::pow(BigInt(10), 40)) == "1");
}
