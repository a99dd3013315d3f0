#include <doctest.h>

#include "stacksimplex/errors.hpp"
#include "stacksimplex/linalg.hpp"

using namespace stacksimplex;

TEST_CASE("determinant, rank and unimodularity") {
    Mat a = Mat::from_rows({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}});
    CHECK(determinant(a) == Rational(-2));
    Mat b = Mat::from_rows({{Rational(2), Rational(0), Rational(1)},
                            {Rational(1), Rational(1), Rational(0)},
                            {Rational(0), Rational(3), Rational(1)}});
    CHECK(determinant(b) == Rational(5));
    CHECK(rank(b) == 3);
    Mat dep = Mat::from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}});
    CHECK(rank(dep) == 1);
    CHECK(determinant(dep) == Rational(0));
    CHECK(nullspace(dep).size() == 1);

    Mat uni = Mat::from_rows({{Rational(1), Rational(1)}, {Rational(0), Rational(1)}});
    CHECK(is_unimodular(uni));
    Mat notuni = Mat::from_rows({{Rational(2), Rational(0)}, {Rational(0), Rational(1)}});
    CHECK_FALSE(is_unimodular(notuni));
    Mat frac = Mat::from_rows({{Rational(1, 2), Rational(0)}, {Rational(0), Rational(2)}});
    CHECK_FALSE(is_unimodular(frac));  // determinant 1 but not an integer matrix
}

TEST_CASE("linear solving distinguishes unique, none and many") {
    Mat a = Mat::from_rows({{Rational(2), Rational(1)}, {Rational(1), Rational(-1)}});
    Vec b{Rational(5), Rational(1)};
    auto x = solve_linear(a, b);
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == b);
    CHECK((*x)[0] == Rational(2));
    CHECK((*x)[1] == Rational(1));

    Mat inconsistent = Mat::from_rows({{Rational(1)}, {Rational(1)}});
    CHECK_FALSE(solve_linear(inconsistent, Vec{Rational(1), Rational(2)}).has_value());

    Mat under = Mat::from_rows({{Rational(1), Rational(1)}});
    CHECK_THROWS_AS(solve_linear(under, Vec{Rational(1)}), UnderdeterminedError);
}

TEST_CASE("inverse undoes application") {
    Mat a = Mat::from_rows({{Rational(2), Rational(1)}, {Rational(1), Rational(1)}});
    Mat inv = inverse(a);
    Vec v{Rational(3), Rational(-7)};
    CHECK(inv.apply(a.apply(v)) == v);
    CHECK(a.apply(inv.apply(v)) == v);
}

TEST_CASE("vector arithmetic") {
    Vec a{Rational(1), Rational(2)}, b{Rational(3), Rational(5)};
    CHECK(vec_add(a, b) == Vec{Rational(4), Rational(7)});
    CHECK(vec_sub(b, a) == Vec{Rational(2), Rational(3)});
    CHECK(vec_scale(Rational(3, 2), a) == Vec{Rational(3, 2), Rational(3)});
    CHECK(dot(a, b) == Rational(13));
}
