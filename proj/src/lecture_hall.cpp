#include "stacksimplex/lecture_hall.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "stacksimplex/permutation.hpp"

namespace stacksimplex {

namespace {

std::string point_str(const IntVec& x) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) os << ", ";
        os << x[i];
    }
    os << ")";
    return os.str();
}

std::vector<Vec> sorted_points(const VPolytope& p) {
    std::vector<Vec> pts = p.points();
    std::sort(pts.begin(), pts.end());
    return pts;
}

}  // namespace

VPolytope lecture_hall_simplex(int n) {
    if (n < 1) throw std::invalid_argument("lecture_hall_simplex needs n >= 1");
    std::vector<Vec> pts;
    for (int j = 0; j <= n; ++j) {
        Vec v(n, Rational(0));
        for (int i = n - j; i < n; ++i) v[i] = i + 1;
        pts.push_back(std::move(v));
    }
    return VPolytope::from_points(std::move(pts));
}

Count lecture_hall_count_direct(int n, int t) {
    if (n < 1) throw std::invalid_argument("lecture_hall_count_direct needs n >= 1");
    if (t < 0) throw std::invalid_argument("negative dilate");
    // Iterate from the top coordinate down: x_n in 0..n*t, then each x_k in
    // 0..floor(k * x_{k+1} / (k+1)).
    Count total = 0;
    std::vector<long long> x(n + 1, 0);
    auto recurse = [&](auto&& self, int k) -> void {
        if (k == 0) {
            ++total;
            return;
        }
        long long hi = (k == n) ? static_cast<long long>(n) * t
                                : static_cast<long long>(k) * x[k + 1] / (k + 1);
        for (x[k] = 0; x[k] <= hi; ++x[k]) self(self, k - 1);
    };
    recurse(recurse, n);
    return total;
}

VPolytope drop_zero_vertex_lift(int n) {
    if (n < 1) throw std::invalid_argument("drop_zero_vertex_lift needs n >= 1");
    std::vector<Vec> pts;
    const VPolytope base = lecture_hall_simplex(n);
    for (auto v : base.points()) {
        v.push_back(Rational(n + 1));
        pts.push_back(std::move(v));
    }
    VPolytope lifted = VPolytope::from_points(std::move(pts));

    std::vector<Vec> nonzero;
    const VPolytope big = lecture_hall_simplex(n + 1);
    for (const auto& v : big.points()) {
        bool zero = std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
        if (!zero) nonzero.push_back(v);
    }
    VPolytope facet = VPolytope::from_points(std::move(nonzero));
    if (sorted_points(lifted) != sorted_points(facet))
        throw std::logic_error("lifted vertices do not match the nonzero vertices");
    return lifted;
}

TransformCertificate simplex_to_lecturehall_certificate(int n) {
    if (n < 2) throw std::invalid_argument("certificate needs n >= 2");
    TransformCertificate cert;
    cert.matrix = Mat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) cert.matrix.at(i, j) = -1;
    cert.translation.assign(n, Rational(0));
    for (int k = 1; k <= n; ++k)
        cert.translation[k - 1] = Rational((k + 1) * (k + 2) / 2 - 1);

    // the map must carry the orbit vertices onto the nonzero vertices of
    // lecture_hall_simplex(n)
    std::vector<Vec> images;
    const VPolytope orbit_hull = orbit_polytope(tau(n));
    for (const auto& v : orbit_hull.points())
        images.push_back(vec_add(cert.matrix.apply(v), cert.translation));
    std::sort(images.begin(), images.end());

    std::vector<Vec> expected;
    const VPolytope hall = lecture_hall_simplex(n);
    for (const auto& v : hall.points()) {
        bool zero = std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
        if (!zero) expected.push_back(v);
    }
    std::sort(expected.begin(), expected.end());
    if (images != expected)
        throw std::logic_error("certificate does not map the orbit vertices correctly");
    return cert;
}

EquivalenceReport verify_integral_equivalence(const VPolytope& src, const VPolytope& dst,
                                              const TransformCertificate& cert, int tmax) {
    EquivalenceReport rep;
    if (cert.matrix.rows() != src.ambient() || cert.matrix.cols() != src.ambient() ||
        cert.translation.size() != dst.ambient() || src.ambient() != dst.ambient()) {
        rep.witness = "certificate dimensions do not match the polytopes";
        return rep;
    }
    if (!is_unimodular(cert.matrix)) {
        rep.witness = "matrix determinant is not +1 or -1";
        return rep;
    }
    for (int t = 1; t <= tmax; ++t) {
        auto source_pts = lattice_points(src, Rational(t), Region::Closed);
        auto target_pts = lattice_points(dst, Rational(t), Region::Closed);

        std::vector<IntVec> mapped;
        mapped.reserve(source_pts.size());
        for (const auto& x : source_pts) {
            Vec xr(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) xr[i] = Rational(x[i]);
            Vec y = cert.matrix.apply(xr);
            IntVec yi(y.size());
            for (std::size_t i = 0; i < y.size(); ++i) {
                Rational c = y[i] + Rational(t) * cert.translation[i];
                if (!is_integer(c)) {
                    rep.witness = "t=" + std::to_string(t) + ": image of " + point_str(x) +
                                  " is not a lattice point";
                    return rep;
                }
                yi[i] = numerator(c);
            }
            mapped.push_back(std::move(yi));
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped != target_pts) {
            // find a concrete discrepancy for the witness
            std::set<IntVec> target_set(target_pts.begin(), target_pts.end());
            for (const auto& y : mapped) {
                if (!target_set.count(y)) {
                    rep.witness = "t=" + std::to_string(t) + ": mapped point " + point_str(y) +
                                  " is not in the target dilate";
                    return rep;
                }
            }
            rep.witness = "t=" + std::to_string(t) + ": " + std::to_string(mapped.size()) +
                          " mapped points vs " + std::to_string(target_pts.size()) +
                          " target points";
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

}  // namespace stacksimplex
