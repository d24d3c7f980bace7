#include "doctest.h"
#include "qfa/rational.hpp"

using qfa::ParameterError;
using qfa::Rational;

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("6/8") == Rational(3, 4));
    CHECK(Rational::parse("0.75") == Rational(3, 4));
    CHECK(Rational::parse(".5") == Rational(1, 2));
    CHECK(Rational::parse("1") == Rational(1));
    CHECK(Rational::parse("1.0") == Rational(1));
    CHECK(Rational::parse("-0.25") == Rational(-1, 4));
    CHECK(Rational::parse("9/10").to_double() == 0.9);
    CHECK(Rational::parse("3/4").str() == "3/4");

    CHECK_THROWS_AS(Rational::parse(""), ParameterError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParameterError);
    CHECK_THROWS_AS(Rational::parse("a/b"), ParameterError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParameterError);
    CHECK_THROWS_AS(Rational::parse("0.5x"), ParameterError);
    CHECK_THROWS_AS(Rational::parse("."), ParameterError);
    CHECK_THROWS_AS(Rational::parse("99999999999999999999"), ParameterError);
}

TEST_CASE("rational arithmetic and order") {
    CHECK(Rational(3, 4) - Rational(1, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1) > Rational(99, 100));
}
