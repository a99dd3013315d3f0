#include <doctest.h>

#include <algorithm>

#include "stacksimplex/catalog.hpp"
#include "stacksimplex/errors.hpp"
#include "stacksimplex/permutation.hpp"
#include "stacksimplex/polytope.hpp"

using namespace stacksimplex;

namespace {
Vec v3(int a, int b, int c) { return Vec{Rational(a), Rational(b), Rational(c)}; }
}  // namespace

TEST_CASE("orbit hull of the cyclic shift of size 3") {
    VPolytope p = orbit_polytope(Permutation::parse("231"));
    CHECK(p.ambient() == 3);
    CHECK(p.affine_dim() == 2);
    CHECK(p.is_simplex());
    CHECK(p.is_lattice());
    REQUIRE(p.points().size() == 3);
    CHECK(p.points()[0] == v3(2, 3, 1));
    CHECK(p.points()[1] == v3(2, 1, 3));
    CHECK(p.points()[2] == v3(1, 2, 3));
    REQUIRE(p.coordinate_sum().has_value());
    CHECK(*p.coordinate_sum() == Rational(6));

    auto bary = p.barycentric(Vec{Rational(2), Rational(2), Rational(2)});
    REQUIRE(bary.has_value());
    CHECK(*bary == Vec{Rational(1, 2), Rational(1, 2), Rational(0)});
    CHECK_FALSE(p.barycentric(v3(9, 9, 9)).has_value());
}

TEST_CASE("membership classes") {
    VPolytope p = orbit_polytope(Permutation::parse("231"));
    CHECK(p.membership(v3(2, 3, 1)) == MembershipClass::RelativeBoundary);  // a vertex
    CHECK(p.membership(Vec{Rational(2), Rational(2), Rational(2)}) ==
          MembershipClass::RelativeBoundary);  // midpoint of an edge
    Vec centroid{Rational(5, 3), Rational(2), Rational(7, 3)};
    CHECK(p.membership(centroid) == MembershipClass::RelativeInterior);
    CHECK(p.membership(v3(1, 1, 4)) == MembershipClass::Outside);   // right sum, outside
    CHECK(p.membership(v3(0, 0, 0)) == MembershipClass::Outside);   // off the hull plane
}

TEST_CASE("membership is translation invariant") {
    VPolytope p = orbit_polytope(Permutation::parse("2341"));
    Vec shift{Rational(3), Rational(-1), Rational(7, 2), Rational(0)};
    VPolytope q = p.translate(shift);
    std::vector<Vec> probes{
        Vec{Rational(2), Rational(3), Rational(4), Rational(1)},
        Vec{Rational(2), Rational(2), Rational(3), Rational(3)},
        Vec{Rational(7, 4), Rational(9, 4), Rational(5, 2), Rational(7, 2)},
        Vec{Rational(1), Rational(4), Rational(4), Rational(1)},
    };
    for (const auto& x : probes) CHECK(p.membership(x) == q.membership(vec_add(x, shift)));
}

TEST_CASE("dilation composes") {
    VPolytope p = orbit_polytope(Permutation::parse("231"));
    VPolytope a = p.dilate(Rational(3));
    VPolytope b = p.dilate(Rational(3, 2)).dilate(Rational(2));
    CHECK(a.points() == b.points());
    CHECK(p.dilate(Rational(1)).points() == p.points());
}

TEST_CASE("dilated membership matches explicit dilation") {
    VPolytope p = orbit_polytope(Permutation::parse("231"));
    Rational lam(5, 2);
    VPolytope big = p.dilate(lam);
    for (int x = 0; x <= 8; ++x)
        for (int y = 0; y <= 8; ++y)
            for (int z = 0; z <= 8; ++z) {
                Vec pt{Rational(x), Rational(y), Rational(z)};
                CHECK(p.membership_dilated(pt, lam) == big.membership(pt));
            }
}

TEST_CASE("non-simplex facet classification: the unit square") {
    VPolytope sq = polytope_from_spec("cube:2");
    CHECK(sq.ambient() == 2);
    CHECK(sq.affine_dim() == 2);
    CHECK_FALSE(sq.is_simplex());
    CHECK(sq.membership(Vec{Rational(1, 2), Rational(1, 2)}) ==
          MembershipClass::RelativeInterior);
    CHECK(sq.membership(Vec{Rational(0), Rational(1, 2)}) == MembershipClass::RelativeBoundary);
    CHECK(sq.membership(Vec{Rational(2), Rational(0)}) == MembershipClass::Outside);
}

TEST_CASE("projection and lifting") {
    VPolytope p = orbit_polytope(Permutation::parse("231"));
    Vec shift{Rational(-2), Rational(-3), Rational(-1)};
    VPolytope t = p.translate(shift);  // now contains the origin as a vertex
    VPolytope proj = t.project_last_to_zero();
    for (const auto& pt : proj.points()) CHECK(pt[2] == Rational(0));
    CHECK(proj.affine_dim() == t.affine_dim());
    VPolytope dropped = proj.drop_last();
    CHECK(dropped.ambient() == 2);
    VPolytope lifted = dropped.lift_append_zero();
    CHECK(lifted.points() == proj.points());
}

TEST_CASE("normalized volume of small orbit simplices") {
    CHECK(orbit_polytope(Permutation::parse("231")).normalized_volume() == Int(2));
    CHECK(orbit_polytope(Permutation::parse("2341")).normalized_volume() == Int(6));
    // unit segment
    VPolytope seg = VPolytope::from_points({Vec{Rational(0)}, Vec{Rational(1)}});
    CHECK(seg.normalized_volume() == Int(1));
}

TEST_CASE("affine independence helper") {
    CHECK(affinely_independent({v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}));
    CHECK_FALSE(affinely_independent({v3(0, 0, 0), v3(1, 1, 1), v3(2, 2, 2)}));
}

TEST_CASE("orbit of a fully sorted permutation is a point") {
    VPolytope p = orbit_polytope(Permutation::identity(4));
    CHECK(p.affine_dim() == 0);
    CHECK(p.points().size() == 1);
    CHECK(p.membership(to_vec(Permutation::identity(4))) == MembershipClass::RelativeInterior);
}

TEST_CASE("orbit of 321 is a segment, not a triangle") {
    VPolytope p = orbit_polytope(Permutation::parse("321"));
    CHECK(p.points().size() == 2);
    CHECK(p.affine_dim() == 1);
    CHECK(p.is_simplex());
}
