#include <doctest.h>

#include <algorithm>

#include "stacksimplex/catalog.hpp"
#include "stacksimplex/ehrhart.hpp"
#include "stacksimplex/errors.hpp"
#include "stacksimplex/lecture_hall.hpp"
#include "stacksimplex/permutation.hpp"
#include "stacksimplex/serialize.hpp"

using namespace stacksimplex;
using nlohmann::json;

TEST_CASE("permutation JSON round trip") {
    Permutation p = Permutation::parse("23451");
    json j = permutation_to_json(p);
    CHECK(j == json::array({2, 3, 4, 5, 1}));
    CHECK(permutation_from_json(j) == p);

    CHECK_THROWS_AS(permutation_from_json(json{{"a", 1}}), ParseError);
    CHECK_THROWS_AS(permutation_from_json(json::array({1, "x"})), ParseError);
    CHECK_THROWS_AS(permutation_from_json(json::array({1, 3})), ParseError);  // not a bijection
    CHECK_THROWS_AS(permutation_from_json(json::array()), ParseError);
}

TEST_CASE("polytope JSON round trip") {
    VPolytope p = orbit_polytope(Permutation::parse("231"));
    json j = polytope_to_json(p);
    CHECK(j["ambient"] == 3);
    CHECK(j["affine_dim"] == 2);
    CHECK(j["simplex"] == true);
    CHECK(j["vertices"].size() == 3);

    VPolytope back = polytope_from_json(j);
    CHECK(back.ambient() == p.ambient());
    CHECK(back.affine_dim() == p.affine_dim());
    std::vector<Vec> a = p.points(), b = back.points();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
}

TEST_CASE("polytope JSON accepts integers and rational strings") {
    json j = {{"vertices", json::array({json::array({0, "1/2"}), json::array({1, "3/2"})})}};
    VPolytope p = polytope_from_json(j);
    CHECK(p.ambient() == 2);
    CHECK(p.points().size() == 2);
    CHECK_FALSE(p.is_lattice());
}

TEST_CASE("malformed polytope JSON raises ParseError") {
    CHECK_THROWS_AS(polytope_from_json(json::object()), ParseError);
    CHECK_THROWS_AS(polytope_from_json(json{{"vertices", json::array()}}), ParseError);
    CHECK_THROWS_AS(polytope_from_json(json{{"vertices", json::array({1, 2})}}), ParseError);
    CHECK_THROWS_AS(
        polytope_from_json(json{{"vertices", json::array({json::array({json::object()})})}}),
        ParseError);
    CHECK_THROWS_AS(
        polytope_from_json(json{{"vertices", json::array({json::array({"1/0"})})}}),
        ParseError);
    // ragged vertex dimensions
    CHECK_THROWS_AS(
        polytope_from_json(
            json{{"vertices", json::array({json::array({1, 2}), json::array({1})})}}),
        ParseError);
}

TEST_CASE("certificate JSON round trip") {
    TransformCertificate cert = simplex_to_lecturehall_certificate(3);
    json j = certificate_to_json(cert);
    CHECK(j["matrix"].size() == 3);
    CHECK(j["translation"].size() == 3);
    CHECK(j["matrix"][0] == json::array({-1, 0, 0}));
    CHECK(j["translation"] == json::array({2, 5, 9}));

    TransformCertificate back = certificate_from_json(j);
    CHECK(back.translation == cert.translation);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) CHECK(back.matrix.at(i, k) == cert.matrix.at(i, k));

    CHECK_THROWS_AS(certificate_from_json(json::object()), ParseError);
    CHECK_THROWS_AS(certificate_from_json(json{{"matrix", json::array({json::array({1, 2})}) },
                                               {"translation", json::array({"x"})}}),
                    ParseError);
    CHECK_THROWS_AS(
        certificate_from_json(json{
            {"matrix", json::array({json::array({1, 2}), json::array({1})})},
            {"translation", json::array({0, 0})}}),
        ParseError);
}

TEST_CASE("counting summary JSON carries every field") {
    EhrhartResult r = analyze(polytope_from_spec("tau:3"), 6);
    json j = ehrhart_to_json(r);
    CHECK(j["poly"] == json::array({"1", "2", "1"}));
    CHECK(j["hstar"] == json::array({1, 1}));
    CHECK(j["hollow"] == true);
    CHECK(j["gorenstein_index"] == 2);
    CHECK(j["gorenstein_symbolic"] == true);
    CHECK(j.contains("gorenstein_checked_tmax"));
}
