#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pnc/rational.hpp"

using pnc::Rational;

TEST_CASE("construction normalizes to lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(6, 3).to_int() == 2);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
  Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(-a == Rational(-1, 2));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK(Rational(7, 3).sign() == 1);
  CHECK(Rational(-7, 3).sign() == -1);
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(0));
  CHECK(Rational(5, 10) <= Rational(1, 2));
}

TEST_CASE("string round trip") {
  CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
  CHECK(Rational::from_string("42") == Rational(42));
  CHECK(Rational(-1, 3).str() == "-1/3");
  CHECK_THROWS(Rational::from_string("x/2"));
  CHECK_THROWS(Rational::from_string("1/0"));
}

TEST_CASE("field axioms on a small grid") {
  for (int an = -4; an <= 4; ++an)
    for (int bn = -4; bn <= 4; ++bn) {
      Rational a(an, 3), b(bn, 5);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) * Rational(7, 2) == a * Rational(7, 2) + b * Rational(7, 2));
      if (!b.is_zero()) CHECK(a / b * b == a);
    }
}
