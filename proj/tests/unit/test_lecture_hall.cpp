#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "stacksimplex/ehrhart.hpp"
#include "stacksimplex/lecture_hall.hpp"
#include "stacksimplex/linalg.hpp"
#include "stacksimplex/permutation.hpp"
#include "stacksimplex/polytope.hpp"

using namespace stacksimplex;

namespace {

Count power(Count base, int exp) {
    Count r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

TEST_CASE("lecture hall simplex vertices") {
    VPolytope p = lecture_hall_simplex(2);
    CHECK(p.ambient() == 2);
    CHECK(p.is_simplex());
    CHECK(p.is_lattice());
    std::vector<Vec> pts = p.points();
    std::sort(pts.begin(), pts.end());
    std::vector<Vec> expected = {
        {Rational(0), Rational(0)}, {Rational(0), Rational(2)}, {Rational(1), Rational(2)}};
    CHECK(pts == expected);

    CHECK(lecture_hall_simplex(5).points().size() == 6);
    CHECK_THROWS_AS(lecture_hall_simplex(0), std::invalid_argument);
}

TEST_CASE("direct chain count matches the polytope count and (t+1)^n") {
    CHECK(lecture_hall_count_direct(4, 1) == 16);
    for (int n = 1; n <= 4; ++n) {
        VPolytope p = lecture_hall_simplex(n);
        for (int t = 0; t <= 3; ++t) {
            Count direct = lecture_hall_count_direct(n, t);
            CHECK(direct == power(t + 1, n));
            CHECK(direct == count_lattice(p, Rational(t), Region::Closed));
        }
    }
    CHECK_THROWS_AS(lecture_hall_count_direct(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(lecture_hall_count_direct(2, -1), std::invalid_argument);
}

TEST_CASE("nonzero-vertex hull is the lifted lecture hall simplex") {
    // the constructor cross-checks the two vertex descriptions itself
    VPolytope lifted = drop_zero_vertex_lift(2);
    CHECK(lifted.ambient() == 3);
    CHECK(lifted.points().size() == 3);
    for (const auto& v : lifted.points()) CHECK(v.back() == Rational(3));

    // appending a constant coordinate cannot change lattice-point counts
    for (int t = 0; t <= 3; ++t)
        CHECK(count_lattice(lifted, Rational(t), Region::Closed) ==
              count_lattice(lecture_hall_simplex(2), Rational(t), Region::Closed));
}

TEST_CASE("certificate maps the sort-orbit simplex onto the nonzero-vertex hull") {
    for (int n = 2; n <= 5; ++n) {
        TransformCertificate cert = simplex_to_lecturehall_certificate(n);
        CHECK(is_unimodular(cert.matrix));
        EquivalenceReport rep = verify_integral_equivalence(
            orbit_polytope(tau(n)), drop_zero_vertex_lift(n - 1), cert, 3);
        CHECK(rep.ok);
        CHECK(rep.witness.empty());
    }
    CHECK_THROWS_AS(simplex_to_lecturehall_certificate(1), std::invalid_argument);
}

TEST_CASE("certificate matrices stay unimodular as n grows") {
    for (int n = 2; n <= 8; ++n)
        CHECK(is_unimodular(simplex_to_lecturehall_certificate(n).matrix));
}

TEST_CASE("corrupted certificates are rejected with a concrete witness") {
    VPolytope src = orbit_polytope(tau(3));
    VPolytope dst = drop_zero_vertex_lift(2);

    SUBCASE("shifted translation") {
        TransformCertificate cert = simplex_to_lecturehall_certificate(3);
        cert.translation[0] += 1;
        EquivalenceReport rep = verify_integral_equivalence(src, dst, cert, 3);
        CHECK_FALSE(rep.ok);
        CHECK_FALSE(rep.witness.empty());
    }

    SUBCASE("singular matrix") {
        TransformCertificate cert = simplex_to_lecturehall_certificate(3);
        cert.matrix.at(0, 0) = 0;
        cert.matrix.at(1, 0) = 0;
        cert.matrix.at(2, 0) = 0;
        EquivalenceReport rep = verify_integral_equivalence(src, dst, cert, 3);
        CHECK_FALSE(rep.ok);
        CHECK(rep.witness == "matrix determinant is not +1 or -1");
    }

    SUBCASE("determinant 2 matrix") {
        TransformCertificate cert = simplex_to_lecturehall_certificate(3);
        cert.matrix.at(0, 0) = -2;
        EquivalenceReport rep = verify_integral_equivalence(src, dst, cert, 3);
        CHECK_FALSE(rep.ok);
        CHECK(rep.witness == "matrix determinant is not +1 or -1");
    }

    SUBCASE("dimension mismatch") {
        TransformCertificate cert = simplex_to_lecturehall_certificate(4);
        EquivalenceReport rep = verify_integral_equivalence(src, dst, cert, 3);
        CHECK_FALSE(rep.ok);
        CHECK(rep.witness == "certificate dimensions do not match the polytopes");
    }
}
