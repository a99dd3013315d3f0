#pragma once

#include <json.hpp>
#include <string>

#include "stacksimplex/ehrhart.hpp"
#include "stacksimplex/lecture_hall.hpp"
#include "stacksimplex/permutation.hpp"
#include "stacksimplex/polytope.hpp"

namespace stacksimplex {

// Permutations export as arrays of integers.
nlohmann::json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const nlohmann::json& j);

// {"ambient": n, "vertices": [[rational strings]], "affine_dim": d,
//  "simplex": bool}; parsing only reads "vertices" and rebuilds the rest.
nlohmann::json polytope_to_json(const VPolytope& p);
VPolytope polytope_from_json(const nlohmann::json& j);

// {"matrix": [[ints]], "translation": [ints]}
nlohmann::json certificate_to_json(const TransformCertificate& cert);
TransformCertificate certificate_from_json(const nlohmann::json& j);

// {"poly": [rational strings], "hstar": [ints], "hollow": bool,
//  "gorenstein_index": k|null} plus certification metadata.
nlohmann::json ehrhart_to_json(const EhrhartResult& r);

}  // namespace stacksimplex
