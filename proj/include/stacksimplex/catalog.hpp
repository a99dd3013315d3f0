#pragma once

#include <string>

#include "stacksimplex/polytope.hpp"

namespace stacksimplex {

// Builds a polytope from a short textual description:
//   "tau:n"         sort-orbit simplex of tau(n), n >= 2
//   "lecturehall:n" lecture-hall simplex in R^n, n >= 1
//   "cube:n"        unit cube [0,1]^n, 1 <= n <= 8
//   "point"         the origin in R^1
//   anything else   parsed as a permutation; yields its sort-orbit hull
// Throws ParseError on malformed descriptions.
VPolytope polytope_from_spec(const std::string& spec);

}  // namespace stacksimplex
