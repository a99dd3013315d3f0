// Release gate: one line per criterion, pinned grids and exact expectations.
// Exit 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "stacksimplex/verify.hpp"

using namespace stacksimplex;

namespace {

struct Criterion {
    std::string label;
    std::vector<CheckResult> results;
};

bool report(const Criterion& c, int number) {
    bool pass = true;
    std::string witness;
    long long ms = 0;
    for (const auto& r : c.results) {
        ms += r.wall_ms;
        if (!r.pass && pass) {
            pass = false;
            witness = r.id + ": " + r.witness;
        }
    }
    std::printf("%s criterion %2d: %s [%lld ms]%s%s\n", pass ? "PASS" : "FAIL", number,
                c.label.c_str(), ms, pass ? "" : " -- ", pass ? "" : witness.c_str());
    return pass;
}

CheckResult timed(CheckResult r, std::chrono::steady_clock::time_point t0) {
    auto t1 = std::chrono::steady_clock::now();
    r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return r;
}

template <typename Fn>
CheckResult run(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    return timed(fn(), t0);
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;
    criteria.push_back({"sorting spot values and the five-element orbit",
                        {run([] { return check_sort_examples(); })}});
    criteria.push_back({"maximal sortability family, exhaustive to size 7",
                        {run([] { return check_maximal_family(7); })}});
    criteria.push_back({"iterate tail forms to size 6, closed form to size 9",
                        {run([] { return check_iterate_forms(6, 9); })}});
    criteria.push_back({"orbit hulls are simplices for the whole family to size 6",
                        {run([] { return check_orbit_simplices(6); })}});
    criteria.push_back({"hollowness and the facet containing all lattice points, sizes 2..6",
                        {run([] { return check_hollowness(6); })}});
    criteria.push_back({"count formula (t+1)^(n-1) and exact coefficients, sizes 2..6",
                        {run([] { return check_count_formula(6, 4, 3); })}});
    criteria.push_back({"lecture-hall chain, certificates and bijections, sizes 2..5",
                        {run([] { return check_lecture_hall_chain(5, 3, false); })}});
    criteria.push_back({"dilate 5/2 example by three independent routes",
                        {run([] { return check_three_route_example(); })}});
    criteria.push_back({"closed and interior dilation recurrences on the rational grid",
                        {run([] { return check_closed_recurrence(4); }),
                         run([] { return check_interior_recurrence(4); })}});
    criteria.push_back({"real-dilate two-shift relation and symbolic index 2",
                        {run([] { return check_real_gorenstein(4, 6); })}});
    criteria.push_back({"floor identity, sizes 2..4, t = 0..12, both branches",
                        {run([] { return check_floor_identity(4, 12); })}});
    criteria.push_back({"h* equals the descent-count vector; sums match volumes",
                        {run([] { return check_hstar_eulerian(6); })}});
    criteria.push_back({"reciprocity between the polynomial and interior counts",
                        {run([] { return check_reciprocity(5, 3); })}});

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i)
        all = report(criteria[i], static_cast<int>(i) + 1) && all;
    std::printf("%s\n", all ? "ALL CRITERIA PASS" : "CRITERIA FAILED");
    return all ? 0 : 1;
}
