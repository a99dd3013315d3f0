#pragma once

#include <optional>
#include <vector>

#include "stacksimplex/polytope.hpp"

namespace stacksimplex {

using Count = long long;

// |lam * P  cap  Z^n| for the closed polytope, or the same for its relative
// interior.  Enumerates the integer bounding box of the dilated vertex set;
// when all vertices share a coordinate sum the last coordinate is determined
// by the others and the scan drops one dimension.
//
// Interior counts of the zero dilate: the relative interior is taken within
// the span of the dilation family, so 0 * P has an empty relative interior
// unless P itself is a point.  Closed counts at lam = 0 are always 1.
Count count_lattice(const VPolytope& p, const Rational& lam, Region region);

// Same walk, but materializes the points (sorted lexicographically).
std::vector<IntVec> lattice_points(const VPolytope& p, const Rational& lam, Region region);

// Exact coefficients (constant term first) of the degree-d counting
// polynomial, interpolated through t = 0..d.  Requires integer vertices.
std::vector<Rational> ehrhart_polynomial(const VPolytope& p);

Rational eval_poly(const std::vector<Rational>& poly, const Rational& t);

// Coefficients of (1-z)^(d+1) * sum_t L(t) z^t truncated to degree d,
// with trailing zeros trimmed.  Entries are nonnegative integers summing to
// the normalized volume.
std::vector<Count> hstar_vector(const VPolytope& p);

// Eulerian number: permutations of {1..n} with exactly k descents.
// Computed by the standard recurrence; valid for n <= 20.
Count eulerian(int n, int k);

// poly(-t) == (-1)^d * (interior count at t), for a positive integer t.
bool reciprocity_check(const VPolytope& p, int t);

struct GorensteinResult {
    std::optional<int> index;
    bool symbolic = false;  // certified by a polynomial identity, not a finite scan
    int checked_tmax = 0;
};

// Smallest k with: interior(k-1) = 0, interior(k) = 1, and
// interior(t) = closed(t-k) beyond that.  Certified symbolically when
// poly(t-k) == (-1)^d poly(-t) holds as polynomials; otherwise the
// conditions are scanned for t <= tmax and reported as finite-range only.
GorensteinResult gorenstein_index(const VPolytope& p, int tmax);

struct EhrhartResult {
    std::vector<Rational> poly;
    std::vector<Count> hstar;
    bool hollow = false;  // no interior lattice points in the first dilate
    GorensteinResult gorenstein;
};

EhrhartResult analyze(const VPolytope& p, int tmax);

// The simplex of the sorting orbit of tau(n) = 2 3 ... n 1, and its copy
// translated by -tau(n) (which puts one vertex at the origin).
VPolytope tau_simplex(int n);
VPolytope tau_simplex_translated(int n);

// Closed count of the (n+1)-point simplex at lam equals the sum of closed
// counts of the n-point one at k/n for k = 0..floor(n*lam).  Both sides
// enumerated independently.
bool recurrence_check(int n, const Rational& lam);

// Interior version: k runs from 1 to ceil(n*lam) - 1 (empty sum = 0).
bool interior_recurrence_check(int n, const Rational& lam);

// Closed count at lam equals the interior count at lam + 2.
bool real_gorenstein_check(int n, const Rational& lam);

// Counts are preserved by zeroing the last coordinate after translating by
// -p, for any rational p in the affine hull.  Throws std::invalid_argument
// when p is outside the hull.
bool projection_count_check(int n, const Rational& lam, const Vec& p);

// Translating by the first n entries of tau(n+1) instead of tau(n) gives the
// same count at dilation t/n.
bool translation_count_check(int n, int t);

// Reindexing identity between two sums of interior counts of dilates of the
// translated simplex; the summation bounds differ by floor/ceil bookkeeping.
bool floor_identity_check(int n, int t);

}  // namespace stacksimplex
