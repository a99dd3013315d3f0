#pragma once

#include <optional>
#include <vector>

#include "stacksimplex/linalg.hpp"
#include "stacksimplex/permutation.hpp"

namespace stacksimplex {

enum class MembershipClass { Outside, RelativeBoundary, RelativeInterior };

// Where a lattice-point count looks: the closed polytope, or its interior
// relative to the affine hull.
enum class Region { Closed, RelativeInterior };

// A polytope given by points (V-representation).  Duplicates are removed at
// construction; non-extreme points are kept in the list but flagged.  All
// classification below is relative to the affine hull, so lower-dimensional
// polytopes behave the same as full-dimensional ones.
class VPolytope {
public:
    // Throws std::invalid_argument on empty or ragged input.
    static VPolytope from_points(std::vector<Vec> pts);

    std::size_t ambient() const { return ambient_; }
    std::size_t affine_dim() const { return affine_dim_; }
    const std::vector<Vec>& points() const { return pts_; }
    const std::vector<bool>& extreme() const { return extreme_; }
    bool is_simplex() const { return simplex_; }
    bool is_lattice() const { return lattice_; }

    // The common coordinate sum of all points, when they share one exactly.
    // Lets lattice enumeration drop one dimension.
    const std::optional<Rational>& coordinate_sum() const { return coord_sum_; }

    // Full classification of x against this polytope.  Non-simplex polytopes
    // with affine dimension > 4 can only be classified Outside vs inside;
    // asking for the finer answer there throws UnsupportedQueryError
    // ("unclassified-inside").
    MembershipClass membership(const Vec& x) const;

    // Same, against the dilate lam * P (lam >= 0) without materializing it.
    MembershipClass membership_dilated(const Vec& x, const Rational& lam) const;

    // Closed membership only; falls back to exact LP feasibility when no
    // facet description is available, so it works at any dimension.
    bool contains_dilated(const Vec& x, const Rational& lam) const;

    // Fast path for integer points: x in (a/b) * P, a >= 0, b > 0.
    MembershipClass classify_lattice_point(const IntVec& x, const Int& a, const Int& b) const;
    bool contains_lattice_point(const IntVec& x, const Int& a, const Int& b) const;

    // Barycentric coordinates of x (simplex only); nullopt when x is outside
    // the affine hull.  Throws std::logic_error on non-simplices.
    std::optional<Vec> barycentric(const Vec& x) const;

    bool in_affine_hull(const Vec& x) const;

    // lam = 0 gives the single point at the origin.  Throws on lam < 0.
    VPolytope dilate(const Rational& lam) const;
    VPolytope translate(const Vec& t) const;

    // Coordinate maps.  project_last_to_zero keeps the ambient dimension and
    // zeroes the last coordinate; drop_last removes it; lift_append_zero
    // appends a zero coordinate.
    VPolytope project_last_to_zero() const;
    VPolytope drop_last() const;
    VPolytope lift_append_zero() const;

    // |det| of the edge-vector matrix in a lattice basis of the affine
    // hull's lattice: gcd of the maximal minors of the edge matrix.
    // Requires a simplex with integer vertices.
    Int normalized_volume() const;

private:
    VPolytope() = default;

    std::vector<Vec> pts_;
    std::vector<bool> extreme_;
    std::size_t ambient_ = 0;
    std::size_t affine_dim_ = 0;
    bool simplex_ = false;
    bool lattice_ = false;
    std::optional<Rational> coord_sum_;

    // Simplex membership: the system [V ; 1] mu = [x/lam ; 1] cleared to
    // integers.  sys_ holds [c*V ; 1] (c = common denominator of the
    // vertices); adj_/det_ invert the selected row square block.
    struct BarySolver {
        Int scale;                            // c
        std::vector<IntVec> sys;              // (ambient+1) x m
        std::vector<std::size_t> selected;    // m row indices, invertible block
        std::vector<std::size_t> residual;    // the rest
        std::vector<IntVec> adj;              // adjugate of the block, m x m
        Int det;                              // its determinant, nonzero
    };
    std::optional<BarySolver> bary_;

    // Non-simplex membership via brute-force facet enumeration in local
    // coordinates of the affine hull.  Built only for affine_dim <= 4.
    struct FacetSolver {
        Vec origin;                           // pts_[0]
        Mat basis;                            // ambient x d edge basis
        std::vector<std::size_t> sel_rows;    // d independent rows of basis
        Mat sel_inv;                          // inverse of that block
        struct Facet {
            Vec normal;                       // in local coordinates
            Rational offset;                  // normal . y <= offset on P
        };
        std::vector<Facet> facets;
    };
    std::optional<FacetSolver> facets_;

    std::optional<Vec> local_coordinates(const Vec& z) const;  // z - origin = basis * y
    void build_bary_solver();
    void build_facet_solver();
    bool lp_contains(const Vec& x, const Rational& lam) const;

    // Exact solve of [V ; 1] mu = [x/lam ; 1] with x = p/q and lam = a/b,
    // all integer arithmetic.  Returns w with mu_j = w_j / (det * q * a), or
    // nullopt when x/lam is outside the affine hull.
    std::optional<IntVec> bary_solve(const IntVec& p, const Int& q, const Int& a, const Int& b) const;
    MembershipClass classify_from_w(const IntVec& w) const;
};

// Rank test: points are affinely independent iff their difference vectors
// are linearly independent.
bool affinely_independent(const std::vector<Vec>& pts);

// conv of the sorting trajectory of p, as rational points in R^n.
VPolytope orbit_polytope(const Permutation& p);

Vec to_vec(const std::vector<int>& entries);
Vec to_vec(const Permutation& p);

}  // namespace stacksimplex
