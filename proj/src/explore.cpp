#include "stacksimplex/explore.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "stacksimplex/errors.hpp"
#include "stacksimplex/permutation.hpp"

namespace stacksimplex {

namespace {

ExploreRow survey(const Permutation& p) {
    ExploreRow row;
    row.perm = p.str();
    SortOrbit orbit = sort_orbit(p);
    row.orbit_index = orbit.index();
    row.orbit_size = static_cast<int>(orbit.steps.size());
    VPolytope hull = orbit_polytope(p);
    row.affine_dim = hull.affine_dim();
    row.simplex = hull.is_simplex();
    if (row.simplex) row.normalized_volume = hull.normalized_volume();
    row.points_t1 = count_lattice(hull, 1, Region::Closed);
    try {
        row.hollow = count_lattice(hull, 1, Region::RelativeInterior) == 0;
    } catch (const UnsupportedQueryError&) {
        row.hollow.reset();
    }
    row.has_nonextreme =
        std::find(hull.extreme().begin(), hull.extreme().end(), false) != hull.extreme().end();
    return row;
}

}  // namespace

std::vector<ExploreRow> explore_sn(int n, int jobs) {
    if (n < 2 || n > 7) throw std::invalid_argument("survey size must be between 2 and 7");
    std::vector<std::vector<int>> perms;
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
        perms.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));

    std::vector<ExploreRow> rows(perms.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (std::size_t i; (i = cursor.fetch_add(1)) < perms.size();)
            rows[i] = survey(Permutation(perms[i]));
    };
    int threads = std::clamp(jobs, 1, 64);
    std::vector<std::thread> pool;
    for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return rows;
}

void sort_rows(std::vector<ExploreRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const ExploreRow& a, const ExploreRow& b) {
        if (a.normalized_volume.has_value() != b.normalized_volume.has_value())
            return a.normalized_volume.has_value();
        if (a.normalized_volume && b.normalized_volume &&
            *a.normalized_volume != *b.normalized_volume)
            return *a.normalized_volume > *b.normalized_volume;
        if (a.points_t1 != b.points_t1) return a.points_t1 > b.points_t1;
        return a.perm < b.perm;
    });
}

std::string explore_csv(const std::vector<ExploreRow>& rows) {
    std::ostringstream os;
    os << "permutation,orbit_index,orbit_size,affine_dim,simplex,"
          "normalized_volume,points_t1,hollow\n";
    for (const auto& r : rows) {
        os << r.perm << ',' << r.orbit_index << ',' << r.orbit_size << ',' << r.affine_dim << ','
           << (r.simplex ? "true" : "false") << ',';
        if (r.normalized_volume) os << to_string(*r.normalized_volume);
        os << ',' << r.points_t1 << ',';
        if (r.hollow)
            os << (*r.hollow ? "true" : "false");
        else
            os << '?';
        os << '\n';
    }
    return os.str();
}

std::vector<std::string> explore_notes(const std::vector<ExploreRow>& rows) {
    std::vector<std::string> notes;
    long long nonextreme = 0, unsupported = 0;
    for (const auto& r : rows) {
        if (r.has_nonextreme) ++nonextreme;
        if (!r.hollow) ++unsupported;
    }
    if (nonextreme > 0)
        notes.push_back(std::to_string(nonextreme) +
                        " orbit(s) contain an iterate that is not a vertex of its hull");
    if (unsupported > 0)
        notes.push_back(std::to_string(unsupported) +
                        " hull(s) do not support interior queries; hollow column shows '?'");
    return notes;
}

}  // namespace stacksimplex
