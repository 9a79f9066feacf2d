#include <doctest.h>

#include "okbody/rational.hpp"

using okb::Rational;

TEST_CASE("rationals are canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6).num() == -1);
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(0, 7) == Rational(0));
}

TEST_CASE("arithmetic and ordering") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(a > b);
    CHECK(-a < b);
    CHECK(Rational(7, 2).abs() == Rational(7, 2));
    CHECK(Rational(-7, 2).abs() == Rational(7, 2));
}

TEST_CASE("parsing and printing") {
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational(5, 3).str() == "5/3");
    CHECK(Rational(-4, 2).str() == "-2");
    CHECK_THROWS_AS(Rational::parse("x/y"), okb::DomainError);
    CHECK_THROWS_AS(Rational::parse("1/0"), okb::DomainError);
    CHECK_THROWS_AS(Rational::parse(""), okb::DomainError);
}

TEST_CASE("division by zero is a domain error") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), okb::DomainError);
    CHECK_THROWS_AS(Rational(1, 0), okb::DomainError);
}
