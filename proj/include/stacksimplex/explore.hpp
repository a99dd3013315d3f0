#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stacksimplex/ehrhart.hpp"
#include "stacksimplex/polytope.hpp"

namespace stacksimplex {

// One survey row: the sorting orbit of a permutation and the lattice
// statistics of its convex hull.
struct ExploreRow {
    std::string perm;                      // one-line form of the start permutation
    int orbit_index = 0;                   // passes until sorted
    int orbit_size = 0;                    // distinct iterates, start included
    std::size_t affine_dim = 0;            // dimension of the hull
    bool simplex = false;                  // iterates affinely independent
    std::optional<Int> normalized_volume;  // simplices only
    Count points_t1 = 0;                   // lattice points of the hull itself
    std::optional<bool> hollow;            // no relative-interior lattice point;
                                           // empty when the hull shape is not
                                           // supported by interior queries
    bool has_nonextreme = false;           // some iterate is not a hull vertex
};

// Surveys every permutation of size n (2 <= n <= 7) in lexicographic order.
// jobs > 1 distributes rows over threads; the output order is unchanged.
std::vector<ExploreRow> explore_sn(int n, int jobs = 1);

// Sorts a survey for presentation: simplices first by descending volume,
// then by descending point count, ties broken by the permutation itself.
void sort_rows(std::vector<ExploreRow>& rows);

// CSV with the header
// permutation,orbit_index,orbit_size,affine_dim,simplex,normalized_volume,points_t1,hollow
// (volume empty for non-simplices, hollow "?" when unsupported).
std::string explore_csv(const std::vector<ExploreRow>& rows);

// Human remarks about oddities in the survey (for example iterates that are
// not vertices of their own hull); one line per remark.
std::vector<std::string> explore_notes(const std::vector<ExploreRow>& rows);

}  // namespace stacksimplex
