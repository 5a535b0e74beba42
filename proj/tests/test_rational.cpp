#include "doctest.h"
#include "quadrik/error.hpp"
#include "quadrik/rational.hpp"

using quadrik::Error;
using quadrik::ErrorCode;
using quadrik::Integer;
using quadrik::Rational;

TEST_CASE("parse and print") {
  CHECK(Rational::parse("3/6").str() == "1/2");
  CHECK(Rational::parse("-4/2").str() == "-2");
  CHECK(Rational::parse("+7").str() == "7");
  CHECK(Rational::parse("0/5").is_zero());
  CHECK(Rational::parse(" 12/8 ") == Rational(3, 2));
  for (const char* bad : {"", "1.5", "1/0", "abc", "1//2", "3/", "/3", "2/-4", "1 2", "1e3"}) {
    CAPTURE(bad);
    try {
      Rational::parse(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BadRational);
    }
  }
}

TEST_CASE("arithmetic") {
  const Rational a(1, 3), b(-5, 6);
  CHECK((a + b) == Rational(-1, 2));
  CHECK((a - b) == Rational(7, 6));
  CHECK((a * b) == Rational(-5, 18));
  CHECK((a / b) == Rational(-2, 5));
  CHECK(b.abs() == Rational(5, 6));
  CHECK(b.inverse() == Rational(-6, 5));
  CHECK(Rational(2, 3).pow(5) == Rational(32, 243));
  CHECK(Rational(0).pow(0) == Rational(1));
  CHECK(Rational(-7, 2).floor() == Integer(-4));
  CHECK(Rational(7, 2).floor() == Integer(3));
  CHECK(Rational(6).floor() == Integer(6));
  CHECK(a > b);
  CHECK(Rational(1LL << 62) * Rational(4) == Rational(Integer("18446744073709551616")));
  CHECK_THROWS_AS(Rational(0).inverse(), Error);
  CHECK_THROWS_AS(a / Rational(0), Error);
}
