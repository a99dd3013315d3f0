#pragma once

#include <string>

#include "stacksimplex/ehrhart.hpp"
#include "stacksimplex/polytope.hpp"

namespace stacksimplex {

// Simplex {x in R^n : 0 <= x_1/1 <= x_2/2 <= ... <= x_n/n <= 1}, presented by
// its n+1 vertices (0,...,0), (0,...,0,n), (0,...,0,n-1,n), ..., (1,2,...,n).
VPolytope lecture_hall_simplex(int n);

// Counts the integer points of the t-th dilate by iterating the chain of
// inequalities directly (0 <= x_1/1 <= ... <= x_n/n <= t), with no polytope
// machinery involved.  Serves as an independent cross-check for the counters.
Count lecture_hall_count_direct(int n, int t);

// Convex hull of the n+1 nonzero vertices of lecture_hall_simplex(n + 1).
// Equals lecture_hall_simplex(n) with the constant coordinate n + 1 appended
// to every vertex; the constructor asserts that equality.
VPolytope drop_zero_vertex_lift(int n);

// Affine change of coordinates x -> matrix * x + translation with a
// determinant-(+-1) integer matrix; on the t-th dilate it acts as
// x -> matrix * x + t * translation.
struct TransformCertificate {
    Mat matrix;
    Vec translation;
};

// Certificate taking the sort-orbit simplex of tau(n) onto
// drop_zero_vertex_lift(n - 1), i.e. onto the hull of the nonzero vertices of
// lecture_hall_simplex(n).  The matrix is lower triangular with every entry
// -1; the k-th translation entry is (k+1)(k+2)/2 - 1.  Construction verifies
// that the vertex images match and throws std::logic_error otherwise.
TransformCertificate simplex_to_lecturehall_certificate(int n);

struct EquivalenceReport {
    bool ok = false;
    std::string witness;  // first failure, empty when ok
};

// Checks that the certificate's map sends the lattice points of t * src
// bijectively onto the lattice points of t * dst for every t = 1..tmax.
// Requires the matrix to be unimodular (that makes the map injective), every
// image to be integral, and the image sets to coincide.
EquivalenceReport verify_integral_equivalence(const VPolytope& src, const VPolytope& dst,
                                              const TransformCertificate& cert, int tmax);

}  // namespace stacksimplex
