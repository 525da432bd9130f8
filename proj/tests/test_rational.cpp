#include <random>
#include <stdexcept>

#include "doctest.h"
#include "ortho/rational.hpp"

using ortho::factorial;
using ortho::pochhammer;
using ortho::pochhammer_ext;
using ortho::Rational;

TEST_CASE("construction canonicalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(2, 4).num() == 1);
  CHECK(Rational(2, 4).den() == 2);
  CHECK(Rational(3, -6).den() == 2);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse") {
  CHECK(Rational::parse("7/3") == Rational(7, 3));
  CHECK(Rational::parse("-1/3") == Rational(-1, 3));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("arithmetic and comparison") {
  const Rational a(1, 6), b(1, 10);
  CHECK(a + b == Rational(4, 15));
  CHECK(a - b == Rational(1, 15));
  CHECK(a * b == Rational(1, 60));
  CHECK(a / b == Rational(5, 3));
  CHECK(-a == Rational(-1, 6));
  CHECK(a.abs() == a);
  CHECK((-a).abs() == a);
  CHECK(a.inv() == Rational(6));
  CHECK(b < a);
  CHECK(a <= a);
  CHECK(a.str() == "1/6");
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inv(), std::domain_error);
}

TEST_CASE("pow handles negative exponents") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(0) == Rational(1));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(-2).pow(3) == Rational(-8));
  CHECK(Rational(0).pow(4) == Rational(0));
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("square detection") {
  CHECK(Rational(4, 9).is_square());
  CHECK(Rational(1).is_square());
  CHECK(Rational(0).is_square());
  CHECK_FALSE(Rational(2).is_square());
  CHECK_FALSE(Rational(-4, 9).is_square());
  CHECK_FALSE(Rational(4, 8).is_square());  // = 1/2
}

TEST_CASE("rising factorial values") {
  CHECK(pochhammer(Rational(1, 2), 0) == Rational(1));
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(pochhammer(Rational(3), 4) == Rational(360));
  CHECK(pochhammer_ext(Rational(5, 2), -1) == Rational(2, 3));
  CHECK(pochhammer_ext(Rational(5, 2), 2) == pochhammer(Rational(5, 2), 2));
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(5) == Rational(120));
  CHECK_THROWS_AS(pochhammer(Rational(1), -1), std::invalid_argument);
  CHECK_THROWS_AS(factorial(-2), std::invalid_argument);
}

TEST_CASE("rising factorial addition rule on random inputs") {
  std::mt19937_64 rng(7101);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 9), len(0, 8);
  for (int i = 0; i < 200; ++i) {
    const Rational a(num(rng), den(rng));
    const long m = len(rng), n = len(rng);
    CHECK(pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + Rational(m), n));
  }
}
