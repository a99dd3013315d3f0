#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace stacksimplex {

// One verification entry.  `anchor` is a cross-reference tag carried as data
// in every report so results can be matched against their source statements;
// `witness` pins the first failing case; `notes` carries remarks that are
// part of the record (e.g. normalization caveats).  Wall time lives in its
// own field so the rest of the payload stays byte-deterministic.
struct CheckResult {
    std::string id;
    std::string anchor;
    std::string grid;
    bool pass = false;
    std::string witness;
    std::string notes;
    long long wall_ms = 0;
};

struct VerificationReport {
    std::vector<CheckResult> entries;
    int passed() const;
    int failed() const;
    bool ok() const { return failed() == 0; }
};

struct VerifyOptions {
    int nmax = 5;       // largest permutation size exercised (checks cap further)
    int tmax = 3;       // dilate range for certificate/reciprocity checks
    unsigned seed = 0;  // RNG seed for the randomized split-identity property
    int jobs = 1;       // worker threads; results are order-canonicalized
    bool corrupt_certificate = false;  // negative-control hook: sabotage the
                                       // equivalence certificate and expect a failure
};

// Sorting-operator spot values: s(213), the full orbit of tau(5), frozen
// byte-for-byte.
CheckResult check_sort_examples();

// Exhaustive over S_n, n = 3..nmax: ending in (n, 1) is equivalent to needing
// exactly n-1 passes, and the family has (n-2)! members.
CheckResult check_maximal_family(int nmax);

// Iterate tail patterns for every permutation ending (n, 1) with n <= nmax,
// plus the closed form of the tau(n) iterates up to closed_nmax.
CheckResult check_iterate_forms(int nmax, int closed_nmax);

// Orbit hulls of permutations ending (n, 1) are (n-1)-simplices, n <= nmax.
CheckResult check_orbit_simplices(int nmax);

// tau-orbit simplices have empty relative interior at the first dilate, and
// every lattice point other than the identity has first coordinate 2 and lies
// on the facet opposite the identity vertex.  n = 2..nmax.
CheckResult check_hollowness(int nmax);

// Counts of the tau-orbit simplex match (t+1)^(n-1) on t = 0..tcap
// (t capped at tcap6 for n = 6), and the interpolated polynomial equals the
// binomial expansion.  n = 2..nmax.
CheckResult check_count_formula(int nmax, int tcap, int tcap6);

// Lecture-hall chain: direct chain-count oracle == (t+1)^n == polytope count;
// drop-zero-vertex hulls match counts; the explicit certificate maps the
// tau-orbit simplex onto the nonzero-vertex hull bijectively per dilate.
// `corrupt` sabotages the certificate translation (negative control).
CheckResult check_lecture_hall_chain(int nmax, int tmax, bool corrupt);

// The 5/2-dilate example: 12 lattice points by direct enumeration, by the
// recurrence right-hand side, and after projecting the last coordinate.
CheckResult check_three_route_example();

// Closed / relative-interior recurrences on the rational grid
// {j/q : q <= 2n, j <= 3q}, n = 2..nmax, both sides enumerated independently.
CheckResult check_closed_recurrence(int nmax);
CheckResult check_interior_recurrence(int nmax);

// Real-dilate Gorenstein relation on the grid points with (n-1)*lambda
// integral (the relation's actual hypothesis) for n = 2..nmax, with a pinned
// off-hypothesis counterexample as negative control; plus the symbolic
// index-2 certification for n = 2..symbolic_nmax and the enumerated index
// conditions (interior count 0 at dilate 1, 1 at dilate 2).
CheckResult check_real_gorenstein(int nmax, int symbolic_nmax);

// Floor-bound re-indexing identity for n = 2..nmax, t = 0..tmax; covers both
// divisibility branches of t against n+1.
CheckResult check_floor_identity(int nmax, int tmax);

// h*-vector equals the descent-count Eulerian vector of order n-1 and sums to
// normalized volume (n-1)!, n = 3..nmax.  Records the series-normalization
// caveat as a note.
CheckResult check_hstar_eulerian(int nmax);

// Interpolated polynomial at negative arguments reproduces interior counts
// with the parity sign, n = 2..nmax, t = 1..tmax.
CheckResult check_reciprocity(int nmax, int tmax);

// Randomized split identity: for p = L,max,R the sorted output equals
// sort(L) sort(R) max; `samples` draws from mt19937(seed).
CheckResult check_split_identity(unsigned seed, int samples);

// Dropping the last coordinate of the translated tau-orbit simplex preserves
// real-dilate counts, and so does any lattice translation, on a spot grid of
// dilation factors for n = 2..nmax.
CheckResult check_projection_translation(int nmax);

// Runs every check on grids capped by the options, in a fixed order,
// optionally fanning out across `jobs` workers (order of the report is
// canonical regardless).
VerificationReport run_verification(const VerifyOptions& opts);

std::string report_table(const VerificationReport& report);
nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace stacksimplex
