#include "stacksimplex/catalog.hpp"

#include <stdexcept>

#include "stacksimplex/errors.hpp"
#include "stacksimplex/lecture_hall.hpp"
#include "stacksimplex/permutation.hpp"

namespace stacksimplex {

namespace {

int parse_size(const std::string& spec, std::size_t colon, int lo, int hi) {
    std::string tail = spec.substr(colon + 1);
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(tail, &used);
        if (used != tail.size()) throw std::invalid_argument(tail);
    } catch (const std::exception&) {
        throw ParseError("invalid size in '" + spec + "'");
    }
    if (n < lo || n > hi)
        throw ParseError("size in '" + spec + "' must be between " + std::to_string(lo) +
                         " and " + std::to_string(hi));
    return n;
}

}  // namespace

VPolytope polytope_from_spec(const std::string& spec) {
    if (spec == "point") return VPolytope::from_points({Vec{Rational(0)}});
    std::size_t colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string kind = spec.substr(0, colon);
        if (kind == "tau") {
            int n = parse_size(spec, colon, 2, 12);
            return orbit_polytope(tau(n));
        }
        if (kind == "lecturehall") {
            int n = parse_size(spec, colon, 1, 12);
            return lecture_hall_simplex(n);
        }
        if (kind == "cube") {
            int n = parse_size(spec, colon, 1, 8);
            std::vector<Vec> pts;
            for (long long mask = 0; mask < (1LL << n); ++mask) {
                Vec v(n);
                for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
                pts.push_back(std::move(v));
            }
            return VPolytope::from_points(std::move(pts));
        }
        throw ParseError("unknown polytope kind '" + kind + "'");
    }
    return orbit_polytope(Permutation::parse(spec));
}

}  // namespace stacksimplex
