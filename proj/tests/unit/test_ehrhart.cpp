#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "stacksimplex/catalog.hpp"
#include "stacksimplex/ehrhart.hpp"
#include "stacksimplex/permutation.hpp"

using namespace stacksimplex;

TEST_CASE("integer dilate counts follow (t+1)^(n-1)") {
    for (int n = 2; n <= 5; ++n) {
        VPolytope p = tau_simplex(n);
        for (int t = 0; t <= 3; ++t) {
            Count want = 1;
            for (int i = 0; i < n - 1; ++i) want *= t + 1;
            CHECK(count_lattice(p, t, Region::Closed) == want);
        }
    }
}

TEST_CASE("zero dilate conventions") {
    VPolytope p = tau_simplex(3);
    CHECK(count_lattice(p, 0, Region::Closed) == 1);
    CHECK(count_lattice(p, 0, Region::RelativeInterior) == 0);
    VPolytope pt = polytope_from_spec("point");
    CHECK(count_lattice(pt, 0, Region::RelativeInterior) == 1);
    CHECK_THROWS(count_lattice(p, Rational(-1), Region::Closed));
}

TEST_CASE("the 5/2 dilate of the recentered 3-orbit simplex has 12 points") {
    VPolytope p = tau_simplex_translated(3);
    CHECK(count_lattice(p, Rational(5, 2), Region::Closed) == 12);
    // the untranslated hull lies on x1+x2+x3 = 6, so the quarter dilate pins
    // the sum to 3/2 and is empty, while the half dilate pins it to 3 and
    // holds exactly (1, 1, 1)
    CHECK(count_lattice(tau_simplex(3), Rational(1, 4), Region::Closed) == 0);
    CHECK(count_lattice(tau_simplex(3), Rational(1, 2), Region::Closed) == 1);
    CHECK(lattice_points(tau_simplex(3), Rational(1, 2), Region::Closed) ==
          std::vector<IntVec>{{Int(1), Int(1), Int(1)}});
}

TEST_CASE("listed points are sorted, distinct and consistent with the count") {
    VPolytope p = tau_simplex_translated(3);
    for (Rational lam : {Rational(1), Rational(5, 2), Rational(3)}) {
        auto pts = lattice_points(p, lam, Region::Closed);
        CHECK(static_cast<Count>(pts.size()) == count_lattice(p, lam, Region::Closed));
        CHECK(std::is_sorted(pts.begin(), pts.end()));
        CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
    }
}

TEST_CASE("interpolated polynomial and evaluation") {
    VPolytope p = tau_simplex(4);
    auto poly = ehrhart_polynomial(p);  // (t+1)^3
    REQUIRE(poly.size() == 4);
    CHECK(poly[0] == Rational(1));
    CHECK(poly[1] == Rational(3));
    CHECK(poly[2] == Rational(3));
    CHECK(poly[3] == Rational(1));
    CHECK(eval_poly(poly, Rational(4)) == Rational(125));
    CHECK(eval_poly(poly, Rational(-1)) == Rational(0));  // hollow

    auto sq = ehrhart_polynomial(polytope_from_spec("cube:2"));  // (t+1)^2
    CHECK(sq == std::vector<Rational>{Rational(1), Rational(2), Rational(1)});

    auto point = ehrhart_polynomial(polytope_from_spec("point"));
    CHECK(point == std::vector<Rational>{Rational(1)});
}

TEST_CASE("h* vectors of small orbit simplices") {
    CHECK(hstar_vector(tau_simplex(3)) == std::vector<Count>{1, 1});
    CHECK(hstar_vector(tau_simplex(4)) == std::vector<Count>{1, 4, 1});
    CHECK(hstar_vector(tau_simplex(5)) == std::vector<Count>{1, 11, 11, 1});
    VPolytope seg = VPolytope::from_points({Vec{Rational(0)}, Vec{Rational(1)}});
    CHECK(hstar_vector(seg) == std::vector<Count>{1});
}

TEST_CASE("Eulerian numbers against brute-force descent counting") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<Count> brute(n, 0);
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        do {
            ++brute[descent_count(Permutation(v))];
        } while (std::next_permutation(v.begin(), v.end()));
        for (int k = 0; k < n; ++k) CHECK(eulerian(n, k) == brute[k]);
    }
    CHECK(eulerian(4, -1) == 0);
    CHECK(eulerian(4, 4) == 0);
    CHECK_THROWS(eulerian(0, 0));
}

TEST_CASE("reciprocity on small grids") {
    for (int n = 2; n <= 4; ++n)
        for (int t = 1; t <= 3; ++t) CHECK(reciprocity_check(tau_simplex(n), t));
    CHECK(reciprocity_check(polytope_from_spec("cube:2"), 2));
    CHECK_THROWS(reciprocity_check(tau_simplex(3), 0));
}

TEST_CASE("symbolic Gorenstein index of orbit simplices is 2") {
    for (int n = 2; n <= 5; ++n) {
        GorensteinResult g = gorenstein_index(tau_simplex(n), 6);
        REQUIRE(g.index.has_value());
        CHECK(*g.index == 2);
        CHECK(g.symbolic);
    }
    GorensteinResult sq = gorenstein_index(polytope_from_spec("cube:2"), 6);
    REQUIRE(sq.index.has_value());
    CHECK(*sq.index == 2);
    CHECK(sq.symbolic);
}

TEST_CASE("analyze bundles the pieces") {
    EhrhartResult r = analyze(tau_simplex(4), 6);
    CHECK(r.hollow);
    CHECK(r.hstar == std::vector<Count>{1, 4, 1});
    REQUIRE(r.gorenstein.index.has_value());
    CHECK(*r.gorenstein.index == 2);
}

TEST_CASE("real-dilate identities at sample points") {
    CHECK(recurrence_check(2, Rational(5, 2)));
    CHECK(recurrence_check(3, Rational(7, 3)));
    CHECK(interior_recurrence_check(2, Rational(5, 2)));
    // the two-shift relation needs (n-1)*lam integral ...
    CHECK(real_gorenstein_check(2, Rational(2)));
    CHECK(real_gorenstein_check(3, Rational(1, 2)));
    CHECK(real_gorenstein_check(3, Rational(2)));
    CHECK(real_gorenstein_check(4, Rational(1, 3)));
    // ... and genuinely fails off that set: closed((1/2)S) = {origin} but
    // the open 5/2-dilate of the segment S holds (-1,1) and (-2,2)
    CHECK_FALSE(real_gorenstein_check(2, Rational(1, 2)));
    CHECK_FALSE(real_gorenstein_check(3, Rational(1, 4)));
    CHECK(projection_count_check(3, Rational(5, 2), to_vec(tau(3))));
    CHECK(translation_count_check(3, 4));
    for (int t = 0; t <= 8; ++t) CHECK(floor_identity_check(2, t));
    CHECK_THROWS(recurrence_check(1, Rational(1)));
}

TEST_CASE("interior counts certify hollowness at the first dilate") {
    for (int n = 2; n <= 5; ++n)
        CHECK(count_lattice(tau_simplex(n), 1, Region::RelativeInterior) == 0);
    // but the second dilate has exactly one interior point
    for (int n = 2; n <= 5; ++n)
        CHECK(count_lattice(tau_simplex(n), 2, Region::RelativeInterior) == 1);
}
