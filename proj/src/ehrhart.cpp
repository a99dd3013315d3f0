#include "stacksimplex/ehrhart.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace stacksimplex {

namespace {

// Integer bounding box of lam * P, one closed interval per coordinate.
struct Box {
    std::vector<long long> lo, hi;
    bool empty = false;
};

Box dilated_box(const VPolytope& p, const Rational& lam) {
    const std::size_t n = p.ambient();
    Box box;
    box.lo.resize(n);
    box.hi.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational mn = p.points()[0][i], mx = mn;
        for (const auto& v : p.points()) {
            if (v[i] < mn) mn = v[i];
            if (v[i] > mx) mx = v[i];
        }
        Int lo = rat_ceil(lam * mn), hi = rat_floor(lam * mx);
        if (lo > hi) {
            box.empty = true;
            return box;
        }
        box.lo[i] = lo.convert_to<long long>();
        box.hi[i] = hi.convert_to<long long>();
    }
    return box;
}

// Walks every candidate lattice point of the box.  When the polytope's
// points share an exact coordinate sum, the last coordinate is forced to
// target - (sum of the others), and every earlier coordinate is clamped to
// the window that still allows the remaining ones to reach the target, so
// the scan never visits a prefix that cannot be completed.
template <typename Fn>
void for_each_candidate(const VPolytope& p, const Rational& lam, Fn&& fn) {
    const std::size_t n = p.ambient();
    Box box = dilated_box(p, lam);
    if (box.empty) return;

    bool reduce = false;
    long long target = 0;
    if (n > 1 && p.coordinate_sum()) {
        Rational t = lam * *p.coordinate_sum();
        if (!is_integer(t)) return;  // no lattice point can have that sum
        reduce = true;
        target = numerator(t).convert_to<long long>();
    }

    const std::size_t free_dims = reduce ? n - 1 : n;
    IntVec x(n);

    // sufmin/sufmax[i]: bounds on the sum of free coordinates i..free_dims-1
    // plus the forced last coordinate (when reducing).
    std::vector<long long> sufmin(free_dims + 1, 0), sufmax(free_dims + 1, 0);
    if (reduce) {
        sufmin[free_dims] = box.lo[n - 1];
        sufmax[free_dims] = box.hi[n - 1];
    }
    for (std::size_t i = free_dims; i-- > 0;) {
        sufmin[i] = sufmin[i + 1] + box.lo[i];
        sufmax[i] = sufmax[i + 1] + box.hi[i];
    }

    auto emit = [&](long long partial_sum) {
        if (reduce) {
            long long last = target - partial_sum;
            if (last < box.lo[n - 1] || last > box.hi[n - 1]) return;
            x[n - 1] = last;
        }
        fn(x);
    };

    auto dfs = [&](auto&& self, std::size_t i, long long partial_sum) -> void {
        if (i == free_dims) {
            emit(partial_sum);
            return;
        }
        long long vlo = box.lo[i], vhi = box.hi[i];
        if (reduce) {
            long long rem = target - partial_sum;
            vlo = std::max(vlo, rem - sufmax[i + 1]);
            vhi = std::min(vhi, rem - sufmin[i + 1]);
        }
        for (long long v = vlo; v <= vhi; ++v) {
            x[i] = v;
            self(self, i + 1, partial_sum + v);
        }
    };
    dfs(dfs, 0, 0);
}

Count binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Count r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<Rational> poly_shift(const std::vector<Rational>& poly, const Rational& s) {
    // coefficients of poly(t + s)
    std::vector<Rational> out(poly.size(), Rational(0));
    for (std::size_t k = 0; k < poly.size(); ++k) {
        Rational pw = 1;
        for (std::size_t j = k + 1; j-- > 0;) {
            out[j] += poly[k] * binomial(static_cast<int>(k), static_cast<int>(j)) * pw;
            pw *= s;
        }
    }
    return out;
}

std::vector<Rational> poly_reflect(const std::vector<Rational>& poly, std::size_t d) {
    // coefficients of (-1)^d * poly(-t)
    std::vector<Rational> out(poly.size());
    for (std::size_t k = 0; k < poly.size(); ++k) {
        out[k] = poly[k];
        if ((k + d) % 2 == 1) out[k] = -out[k];
    }
    return out;
}

}  // namespace

Count count_lattice(const VPolytope& p, const Rational& lam, Region region) {
    if (lam < 0) throw std::invalid_argument("negative dilation factor");
    if (lam == 0) {
        if (region == Region::Closed) return 1;
        // relative interior within the span of the dilation family
        return p.affine_dim() == 0 ? 1 : 0;
    }
    const Int a = numerator(lam), b = denominator(lam);
    Count count = 0;
    if (region == Region::Closed) {
        for_each_candidate(p, lam, [&](const IntVec& x) {
            if (p.contains_lattice_point(x, a, b)) ++count;
        });
    } else {
        for_each_candidate(p, lam, [&](const IntVec& x) {
            if (p.classify_lattice_point(x, a, b) == MembershipClass::RelativeInterior) ++count;
        });
    }
    return count;
}

std::vector<IntVec> lattice_points(const VPolytope& p, const Rational& lam, Region region) {
    if (lam < 0) throw std::invalid_argument("negative dilation factor");
    std::vector<IntVec> out;
    if (lam == 0) {
        if (region == Region::Closed || p.affine_dim() == 0)
            out.push_back(IntVec(p.ambient(), Int(0)));
        return out;
    }
    const Int a = numerator(lam), b = denominator(lam);
    for_each_candidate(p, lam, [&](const IntVec& x) {
        auto cls = region == Region::Closed
                       ? (p.contains_lattice_point(x, a, b) ? MembershipClass::RelativeInterior
                                                            : MembershipClass::Outside)
                       : p.classify_lattice_point(x, a, b);
        if (cls == MembershipClass::RelativeInterior) out.push_back(x);
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> ehrhart_polynomial(const VPolytope& p) {
    if (!p.is_lattice())
        throw std::invalid_argument("counting polynomial needs integer vertices");
    const int d = static_cast<int>(p.affine_dim());
    Mat vand(d + 1, d + 1);
    Vec counts(d + 1);
    for (int t = 0; t <= d; ++t) {
        Rational pw = 1;
        for (int k = 0; k <= d; ++k) {
            vand.at(t, k) = pw;
            pw *= t;
        }
        counts[t] = count_lattice(p, t, Region::Closed);
    }
    auto sol = solve_linear(vand, counts);
    // Vandermonde with distinct nodes is invertible
    return *sol;
}

Rational eval_poly(const std::vector<Rational>& poly, const Rational& t) {
    Rational v = 0;
    for (std::size_t k = poly.size(); k-- > 0;) v = v * t + poly[k];
    return v;
}

std::vector<Count> hstar_vector(const VPolytope& p) {
    const int d = static_cast<int>(p.affine_dim());
    std::vector<Count> counts(d + 1);
    for (int t = 0; t <= d; ++t) counts[t] = count_lattice(p, t, Region::Closed);
    // multiply the count series by (1-z)^(d+1), keeping degrees 0..d
    std::vector<Count> h(d + 1, 0);
    for (int j = 0; j <= d; ++j) {
        Count s = 0;
        for (int i = 0; i <= j; ++i) {
            Count term = binomial(d + 1, i) * counts[j - i];
            s += (i % 2 == 0) ? term : -term;
        }
        h[j] = s;
    }
    while (h.size() > 1 && h.back() == 0) h.pop_back();
    return h;
}

Count eulerian(int n, int k) {
    if (n < 1) throw std::invalid_argument("eulerian needs n >= 1");
    if (k < 0 || k >= n) return 0;
    std::vector<Count> row{1};  // n = 1
    for (int m = 2; m <= n; ++m) {
        std::vector<Count> next(m, 0);
        for (int j = 0; j < m; ++j) {
            Count a = j < m - 1 ? row[j] : 0;
            Count b = j >= 1 ? row[j - 1] : 0;
            next[j] = (j + 1) * a + (m - j) * b;
        }
        row = std::move(next);
    }
    return row[k];
}

bool reciprocity_check(const VPolytope& p, int t) {
    if (t < 1) throw std::invalid_argument("reciprocity needs a positive dilate");
    auto poly = ehrhart_polynomial(p);
    Rational lhs = eval_poly(poly, Rational(-t));
    if (p.affine_dim() % 2 == 1) lhs = -lhs;
    return lhs == Rational(count_lattice(p, t, Region::RelativeInterior));
}

GorensteinResult gorenstein_index(const VPolytope& p, int tmax) {
    GorensteinResult res;
    res.checked_tmax = tmax;
    auto poly = ehrhart_polynomial(p);
    const std::size_t d = p.affine_dim();

    auto interior = [&](int t) { return count_lattice(p, t, Region::RelativeInterior); };

    auto reflected = poly_reflect(poly, d);
    for (int k = 1; k <= static_cast<int>(d) + 1; ++k) {
        if (poly_shift(poly, Rational(-k)) != reflected) continue;
        if (interior(k - 1) == 0 && interior(k) == 1) {
            res.index = k;
            res.symbolic = true;
            return res;
        }
    }
    for (int k = 1; k <= tmax; ++k) {
        if (interior(k - 1) != 0 || interior(k) != 1) continue;
        bool ok = true;
        for (int t = k + 1; t <= tmax && ok; ++t)
            ok = interior(t) == count_lattice(p, t - k, Region::Closed);
        if (ok) {
            res.index = k;
            res.symbolic = false;
            return res;
        }
    }
    return res;
}

EhrhartResult analyze(const VPolytope& p, int tmax) {
    EhrhartResult r;
    r.poly = ehrhart_polynomial(p);
    r.hstar = hstar_vector(p);
    r.hollow = eval_poly(r.poly, Rational(-1)) == 0;
    r.gorenstein = gorenstein_index(p, tmax);
    return r;
}

VPolytope tau_simplex(int n) { return orbit_polytope(tau(n)); }

VPolytope tau_simplex_translated(int n) {
    Vec shift = to_vec(tau(n));
    for (auto& c : shift) c = -c;
    return tau_simplex(n).translate(shift);
}

bool recurrence_check(int n, const Rational& lam) {
    if (n < 2) throw std::invalid_argument("recurrence_check needs n >= 2");
    if (lam < 0) throw std::invalid_argument("negative dilation factor");
    VPolytope big = tau_simplex_translated(n + 1);
    VPolytope small = tau_simplex_translated(n);
    Count lhs = count_lattice(big, lam, Region::Closed);
    Count rhs = 0;
    Int kmax = rat_floor(Rational(n) * lam);
    for (Int k = 0; k <= kmax; ++k) rhs += count_lattice(small, Rational(k, n), Region::Closed);
    return lhs == rhs;
}

bool interior_recurrence_check(int n, const Rational& lam) {
    if (n < 2) throw std::invalid_argument("interior_recurrence_check needs n >= 2");
    if (lam < 0) throw std::invalid_argument("negative dilation factor");
    VPolytope big = tau_simplex_translated(n + 1);
    VPolytope small = tau_simplex_translated(n);
    Count lhs = count_lattice(big, lam, Region::RelativeInterior);
    Count rhs = 0;
    Int kmax = rat_ceil(Rational(n) * lam) - 1;
    for (Int k = 1; k <= kmax; ++k)
        rhs += count_lattice(small, Rational(k, n), Region::RelativeInterior);
    return lhs == rhs;
}

bool real_gorenstein_check(int n, const Rational& lam) {
    if (n < 2) throw std::invalid_argument("real_gorenstein_check needs n >= 2");
    if (lam < 0) throw std::invalid_argument("negative dilation factor");
    VPolytope s = tau_simplex_translated(n);
    return count_lattice(s, lam, Region::Closed) ==
           count_lattice(s, lam + 2, Region::RelativeInterior);
}

bool projection_count_check(int n, const Rational& lam, const Vec& p) {
    if (n < 2) throw std::invalid_argument("projection_count_check needs n >= 2");
    if (lam < 0) throw std::invalid_argument("negative dilation factor");
    VPolytope s = tau_simplex(n);
    if (!s.in_affine_hull(p))
        throw std::invalid_argument("translation point must lie in the affine hull");
    Vec neg(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) neg[i] = -p[i];
    VPolytope shifted = s.translate(neg);
    Count lhs = count_lattice(shifted, lam, Region::Closed);
    Count rhs = count_lattice(shifted.project_last_to_zero(), lam, Region::Closed);
    return lhs == rhs;
}

bool translation_count_check(int n, int t) {
    if (n < 2) throw std::invalid_argument("translation_count_check needs n >= 2");
    if (t < 0) throw std::invalid_argument("negative dilate");
    Rational lam(t, n);
    // first n entries of tau(n+1): (2, 3, ..., n+1)
    Vec shift(n);
    for (int i = 0; i < n; ++i) shift[i] = -(i + 2);
    Count lhs = count_lattice(tau_simplex(n).translate(shift), lam, Region::Closed);
    Count rhs = count_lattice(tau_simplex_translated(n), lam, Region::Closed);
    return lhs == rhs;
}

bool floor_identity_check(int n, int t) {
    if (n < 2) throw std::invalid_argument("floor_identity_check needs n >= 2");
    if (t < 0) throw std::invalid_argument("negative parameter");
    VPolytope s = tau_simplex_translated(n);
    std::map<Rational, Count> memo;
    auto interior_at = [&](const Rational& lam) {
        auto it = memo.find(lam);
        if (it != memo.end()) return it->second;
        Count c = count_lattice(s, lam, Region::RelativeInterior);
        memo.emplace(lam, c);
        return c;
    };
    Count lhs = 0;
    Int lmax = rat_floor(Rational(static_cast<long long>(n) * t, n + 1));
    for (Int k = 0; k <= lmax; ++k) {
        const Int num = k + 2 * n - 1;
        lhs += interior_at(rat(num, n));
    }
    // The left sum visits the dilates (k + 2n - 1)/n for k up to
    // floor(nt/(n+1)); the right one must end at the same dilate, and
    // ceil(n(t + 2n + 1)/(n + 1)) - 1 == 2n - 1 + floor(nt/(n+1)) because
    // n(t + 2n + 1) = (2n - 1)(n + 1) + nt + 1.
    Count rhs = 0;
    Int rmax = rat_ceil(Rational(static_cast<long long>(n) * (t + 2 * n + 1), n + 1)) - 1;
    for (Int k = 2 * n - 1; k <= rmax; ++k) rhs += interior_at(Rational(k, n));
    return lhs == rhs;
}

}  // namespace stacksimplex
