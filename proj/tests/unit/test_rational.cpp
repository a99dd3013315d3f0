#include <doctest.h>

#include "stacksimplex/errors.hpp"
#include "stacksimplex/rational.hpp"

using namespace stacksimplex;

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(parse_rational("5/2")) == "5/2");
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK(to_string(parse_rational("-9/3")) == "-3");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK(parse_rational("5/2") == Rational(5, 2));
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("2/-3"), ParseError);
    CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
    CHECK_THROWS_AS(parse_int("3/2"), ParseError);
    CHECK(parse_int("-12") == Int(-12));
}

TEST_CASE("floor, ceiling and integrality") {
    CHECK(rat_floor(Rational(7, 2)) == 3);
    CHECK(rat_ceil(Rational(7, 2)) == 4);
    CHECK(rat_floor(Rational(-5, 2)) == -3);
    CHECK(rat_ceil(Rational(-5, 2)) == -2);
    CHECK(rat_floor(Rational(4)) == 4);
    CHECK(rat_ceil(Rational(4)) == 4);
    CHECK(rat_floor(Rational(0)) == 0);
    CHECK(is_integer(Rational(8, 4)));
    CHECK_FALSE(is_integer(Rational(1, 3)));
}

TEST_CASE("rational helper builds in lowest terms") {
    CHECK(rat(Int(10), Int(4)) == Rational(5, 2));
    CHECK(to_string(rat(Int(-10), Int(4))) == "-5/2");
}
