#include <doctest.h>

#include "vnfree/rational.hpp"

using namespace vnfree;

TEST_SUITE("rational") {

TEST_CASE("reduction and sign normalization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(-3, 9).str() == "-1/3");
  CHECK(Rational(3, 9).denominator() == 3);
}

TEST_CASE("exact arithmetic") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK((a + b) - b == a);
  CHECK(-a == Rational(-1, 3));
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), RangeError);
  CHECK_THROWS_AS(Rational(1, 0), RangeError);
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(7, 3) > Rational(2));
}

TEST_CASE("string round trip") {
  for (const char* s : {"0", "1", "-1", "1/2", "-3/7", "22/7",
                        "98765432109876543210987654321/2"}) {
    CHECK(Rational::from_string(s).str() == s);
  }
  CHECK(Rational::from_string("4/8").str() == "1/2");
  CHECK_THROWS_AS(Rational::from_string(""), RangeError);
  CHECK_THROWS_AS(Rational::from_string("1/"), RangeError);
  CHECK_THROWS_AS(Rational::from_string("a/2"), RangeError);
  CHECK_THROWS_AS(Rational::from_string("1/0"), RangeError);
  CHECK_THROWS_AS(Rational::from_string("1/2/3"), RangeError);
}

TEST_CASE("arbitrary precision") {
  // Repeated squaring blows past any machine word.
  Rational x(3, 2);
  for (int i = 0; i < 8; ++i) x = x * x;
  CHECK(x.denominator() == mpz_class(1) << 256);
}

TEST_CASE("extended parameter ordering and absorption") {
  const ExtParam inf = ExtParam::infinity();
  CHECK(inf == ExtParam::infinity());
  CHECK(inf > ExtParam(Rational(1000000)));
  CHECK(ExtParam(Rational(3, 2)) < inf);
  CHECK((inf + ExtParam(Rational(5))).is_infinite());
  CHECK((ExtParam(Rational(5)) + inf).is_infinite());
  CHECK(ExtParam(Rational(2)) + ExtParam(Rational(3)) == ExtParam(Rational(5)));
  CHECK(inf.str() == "inf");
  CHECK(ExtParam(Rational(5, 2)).str() == "5/2");
  CHECK_THROWS_AS(inf.finite(), InternalInvariantViolation);
}

}  // TEST_SUITE
