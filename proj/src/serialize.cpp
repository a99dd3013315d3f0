#include "stacksimplex/serialize.hpp"

#include <stdexcept>

#include "stacksimplex/errors.hpp"

namespace stacksimplex {

namespace {

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected a rational as an integer or \"p/q\" string");
}

long long int_from_rational(const Rational& r, const char* what) {
    if (!is_integer(r)) throw std::invalid_argument(std::string(what) + " must be integral");
    return numerator(r).convert_to<long long>();
}

}  // namespace

nlohmann::json permutation_to_json(const Permutation& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : p.entries()) arr.push_back(v);
    return arr;
}

Permutation permutation_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("permutation JSON must be an array of integers");
    std::vector<int> entries;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("permutation entries must be integers");
        entries.push_back(v.get<int>());
    }
    try {
        return Permutation(std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

nlohmann::json polytope_to_json(const VPolytope& p) {
    nlohmann::json vertices = nlohmann::json::array();
    for (const auto& v : p.points()) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& c : v) row.push_back(to_string(c));
        vertices.push_back(std::move(row));
    }
    return nlohmann::json{{"ambient", p.ambient()},
                          {"vertices", std::move(vertices)},
                          {"affine_dim", p.affine_dim()},
                          {"simplex", p.is_simplex()}};
}

VPolytope polytope_from_json(const nlohmann::json& j) {
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
        throw ParseError("polytope JSON needs a nonempty \"vertices\" array");
    std::vector<Vec> pts;
    for (const auto& row : j["vertices"]) {
        if (!row.is_array()) throw ParseError("each vertex must be an array");
        Vec v;
        for (const auto& c : row) v.push_back(rational_from_json(c));
        pts.push_back(std::move(v));
    }
    try {
        return VPolytope::from_points(std::move(pts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

nlohmann::json certificate_to_json(const TransformCertificate& cert) {
    nlohmann::json matrix = nlohmann::json::array();
    for (std::size_t i = 0; i < cert.matrix.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < cert.matrix.cols(); ++k)
            row.push_back(int_from_rational(cert.matrix.at(i, k), "certificate matrix entry"));
        matrix.push_back(std::move(row));
    }
    nlohmann::json translation = nlohmann::json::array();
    for (const auto& c : cert.translation)
        translation.push_back(int_from_rational(c, "certificate translation entry"));
    return nlohmann::json{{"matrix", std::move(matrix)}, {"translation", std::move(translation)}};
}

TransformCertificate certificate_from_json(const nlohmann::json& j) {
    if (!j.contains("matrix") || !j["matrix"].is_array() || j["matrix"].empty() ||
        !j.contains("translation") || !j["translation"].is_array())
        throw ParseError("certificate JSON needs \"matrix\" and \"translation\" arrays");
    TransformCertificate cert;
    const auto& m = j["matrix"];
    std::size_t cols = m[0].size();
    cert.matrix = Mat(m.size(), cols);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i].is_array() || m[i].size() != cols) throw ParseError("ragged certificate matrix");
        for (std::size_t k = 0; k < cols; ++k) {
            if (!m[i][k].is_number_integer())
                throw ParseError("certificate matrix entries must be integers");
            cert.matrix.at(i, k) = Rational(m[i][k].get<long long>());
        }
    }
    for (const auto& c : j["translation"]) {
        if (!c.is_number_integer())
            throw ParseError("certificate translation entries must be integers");
        cert.translation.push_back(Rational(c.get<long long>()));
    }
    return cert;
}

nlohmann::json ehrhart_to_json(const EhrhartResult& r) {
    nlohmann::json poly = nlohmann::json::array();
    for (const auto& c : r.poly) poly.push_back(to_string(c));
    nlohmann::json hstar = nlohmann::json::array();
    for (Count h : r.hstar) hstar.push_back(h);
    nlohmann::json g;
    if (r.gorenstein.index)
        g = *r.gorenstein.index;
    else
        g = nullptr;
    return nlohmann::json{{"poly", std::move(poly)},
                          {"hstar", std::move(hstar)},
                          {"hollow", r.hollow},
                          {"gorenstein_index", std::move(g)},
                          {"gorenstein_symbolic", r.gorenstein.symbolic},
                          {"gorenstein_checked_tmax", r.gorenstein.checked_tmax}};
}

}  // namespace stacksimplex
