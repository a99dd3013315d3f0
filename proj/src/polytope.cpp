#include "stacksimplex/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "stacksimplex/lp.hpp"

namespace stacksimplex {

namespace {

// Advances idx to the next k-combination of {0..n-1}; false when exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

Int bareiss_int_det(std::vector<IntVec> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd(a, b) * b;
}

}  // namespace

bool affinely_independent(const std::vector<Vec>& pts) {
    if (pts.empty()) throw std::invalid_argument("no points");
    if (pts.size() == 1) return true;
    Mat diffs(pts.size() - 1, pts[0].size());
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].size() != pts[0].size()) throw std::invalid_argument("ragged points");
        for (std::size_t j = 0; j < pts[0].size(); ++j)
            diffs.at(i - 1, j) = pts[i][j] - pts[0][j];
    }
    return rank(diffs) == pts.size() - 1;
}

VPolytope VPolytope::from_points(std::vector<Vec> pts) {
    if (pts.empty()) throw std::invalid_argument("a polytope needs at least one point");
    VPolytope p;
    p.ambient_ = pts[0].size();
    if (p.ambient_ == 0) throw std::invalid_argument("zero-dimensional ambient space");
    for (const auto& v : pts) {
        if (v.size() != p.ambient_) throw std::invalid_argument("ragged input points");
        if (std::find(p.pts_.begin(), p.pts_.end(), v) == p.pts_.end()) p.pts_.push_back(v);
    }

    // affine dimension = rank of the difference matrix
    {
        Mat diffs(p.pts_.size() - 1, p.ambient_);
        for (std::size_t i = 1; i < p.pts_.size(); ++i)
            for (std::size_t j = 0; j < p.ambient_; ++j)
                diffs.at(i - 1, j) = p.pts_[i][j] - p.pts_[0][j];
        p.affine_dim_ = p.pts_.size() == 1 ? 0 : rank(diffs);
    }
    p.simplex_ = (p.pts_.size() == p.affine_dim_ + 1);

    p.lattice_ = true;
    for (const auto& v : p.pts_)
        for (const auto& c : v)
            if (!is_integer(c)) p.lattice_ = false;

    {
        Rational s0 = 0;
        for (const auto& c : p.pts_[0]) s0 += c;
        bool shared = true;
        for (const auto& v : p.pts_) {
            Rational s = 0;
            for (const auto& c : v) s += c;
            if (s != s0) shared = false;
        }
        if (shared) p.coord_sum_ = s0;
    }

    if (p.simplex_) {
        p.extreme_.assign(p.pts_.size(), true);
        p.build_bary_solver();
    } else {
        // a point is extreme iff it is not a convex combination of the rest
        p.extreme_.assign(p.pts_.size(), false);
        const std::size_t m = p.pts_.size();
        for (std::size_t k = 0; k < m; ++k) {
            std::vector<LinearConstraint> cons;
            const std::size_t nv = m - 1;
            for (std::size_t j = 0; j < nv; ++j) {
                Vec e(nv);
                e[j] = 1;
                cons.push_back({std::move(e), Rel::GE, 0});
            }
            cons.push_back({Vec(nv, Rational(1)), Rel::EQ, 1});
            for (std::size_t i = 0; i < p.ambient_; ++i) {
                Vec row(nv);
                std::size_t col = 0;
                for (std::size_t j = 0; j < m; ++j)
                    if (j != k) row[col++] = p.pts_[j][i];
                cons.push_back({std::move(row), Rel::EQ, p.pts_[k][i]});
            }
            p.extreme_[k] = !lp_feasible(cons, nv);
        }
        if (p.affine_dim_ <= 4) p.build_facet_solver();
    }
    return p;
}

void VPolytope::build_bary_solver() {
    BarySolver bs;
    const std::size_t m = pts_.size();
    bs.scale = 1;
    for (const auto& v : pts_)
        for (const auto& c : v) bs.scale = lcm_int(bs.scale, denominator(c));

    bs.sys.assign(ambient_ + 1, IntVec(m));
    for (std::size_t i = 0; i < ambient_; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Rational v = pts_[j][i] * bs.scale;
            assert(denominator(v) == 1);
            bs.sys[i][j] = numerator(v);
        }
    for (std::size_t j = 0; j < m; ++j) bs.sys[ambient_][j] = 1;

    // pick m rows forming an invertible block (affine independence
    // guarantees full column rank)
    Mat acc(0, 0);
    std::vector<Vec> acc_rows;
    for (std::size_t i = 0; i <= ambient_ && bs.selected.size() < m; ++i) {
        Vec r(m);
        for (std::size_t j = 0; j < m; ++j) r[j] = Rational(bs.sys[i][j]);
        acc_rows.push_back(r);
        Mat trial = Mat::from_rows(acc_rows);
        if (rank(trial) == acc_rows.size())
            bs.selected.push_back(i);
        else
            acc_rows.pop_back();
    }
    if (bs.selected.size() != m) throw std::logic_error("simplex system is rank-deficient");
    for (std::size_t i = 0; i <= ambient_; ++i)
        if (std::find(bs.selected.begin(), bs.selected.end(), i) == bs.selected.end())
            bs.residual.push_back(i);

    std::vector<IntVec> block(m, IntVec(m));
    for (std::size_t i = 0; i < m; ++i) block[i] = bs.sys[bs.selected[i]];
    bs.det = bareiss_int_det(block);
    assert(bs.det != 0);

    // adjugate = det * inverse, entries integral for an integer block
    Mat rb(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) rb.at(i, j) = Rational(block[i][j]);
    Mat inv = inverse(rb);
    bs.adj.assign(m, IntVec(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Rational e = inv.at(i, j) * Rational(bs.det);
            assert(denominator(e) == 1);
            bs.adj[i][j] = numerator(e);
        }
    bary_ = std::move(bs);
}

std::optional<Vec> VPolytope::local_coordinates(const Vec& z) const {
    const auto& fs = *facets_;
    Vec w = vec_sub(z, fs.origin);
    Vec wsel(fs.sel_rows.size());
    for (std::size_t i = 0; i < fs.sel_rows.size(); ++i) wsel[i] = w[fs.sel_rows[i]];
    Vec y = fs.sel_inv.apply(wsel);
    Vec check = fs.basis.apply(y);
    for (std::size_t i = 0; i < ambient_; ++i)
        if (check[i] != w[i]) return std::nullopt;
    return y;
}

void VPolytope::build_facet_solver() {
    FacetSolver fs;
    fs.origin = pts_[0];
    const std::size_t d = affine_dim_;

    // pick d independent edge vectors as the frame
    std::vector<Vec> cols;
    for (std::size_t j = 1; j < pts_.size() && cols.size() < d; ++j) {
        cols.push_back(vec_sub(pts_[j], pts_[0]));
        if (rank(Mat::from_rows(cols)) != cols.size()) cols.pop_back();
    }
    assert(cols.size() == d);
    fs.basis = Mat::from_columns(cols);

    // and d independent rows of the frame, for solving
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ambient_ && rows.size() < d; ++i) {
        rows.push_back(fs.basis.row(i));
        if (rank(Mat::from_rows(rows)) == rows.size())
            fs.sel_rows.push_back(i);
        else
            rows.pop_back();
    }
    assert(fs.sel_rows.size() == d);
    fs.sel_inv = inverse(Mat::from_rows(rows));
    facets_ = std::move(fs);  // local_coordinates needs the frame in place

    // local coordinates of the extreme points
    std::vector<Vec> ext;
    for (std::size_t j = 0; j < pts_.size(); ++j)
        if (extreme_[j]) {
            auto y = local_coordinates(pts_[j]);
            assert(y);
            ext.push_back(*y);
        }

    // brute force: every d-subset spanning a hyperplane that supports the
    // polytope contributes a facet inequality
    std::set<std::pair<std::vector<Int>, Rational>> seen;
    std::vector<FacetSolver::Facet> facets;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    if (ext.size() >= d) {
        do {
            Mat diffs(d - 1 == 0 ? 0 : d - 1, d);
            for (std::size_t i = 1; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    diffs.at(i - 1, j) = ext[idx[i]][j] - ext[idx[0]][j];
            if (d > 1 && rank(diffs) != d - 1) continue;
            auto ns = nullspace(diffs);
            if (ns.size() != 1) continue;
            Vec alpha = ns[0];
            Rational c = dot(alpha, ext[idx[0]]);
            bool pos = false, neg = false;
            for (const auto& y : ext) {
                Rational v = dot(alpha, y) - c;
                if (v > 0) pos = true;
                if (v < 0) neg = true;
            }
            if (pos && neg) continue;
            if (!pos && !neg) continue;  // all points on the hyperplane: not a facet
            if (pos) {
                alpha = vec_scale(-1, alpha);
                c = -c;
            }
            // normalize to a primitive integer normal for deduplication
            Int l = 1;
            for (const auto& a : alpha) l = lcm_int(l, denominator(a));
            Int g = 0;
            for (const auto& a : alpha) {
                Rational s = a * l;
                g = gcd(g, numerator(s));
            }
            if (g < 0) g = -g;
            Rational f = Rational(l) / g;
            std::vector<Int> key;
            Vec normal(alpha.size());
            for (std::size_t j = 0; j < alpha.size(); ++j) {
                Rational s = alpha[j] * f;
                assert(denominator(s) == 1);
                key.push_back(numerator(s));
                normal[j] = s;
            }
            Rational coff = c * f;
            if (seen.insert({key, coff}).second) facets.push_back({std::move(normal), coff});
        } while (next_combination(idx, ext.size()));
    }
    facets_->facets = std::move(facets);
}

std::optional<IntVec> VPolytope::bary_solve(const IntVec& p, const Int& q, const Int& a,
                                            const Int& b) const {
    const auto& bs = *bary_;
    const std::size_t m = pts_.size();
    // rhs of row i: b*c*p_i for coordinate rows, a*q for the ones row
    const Int bc = b * bs.scale;
    const Int aq = a * q;
    IntVec rhs(ambient_ + 1);
    for (std::size_t i = 0; i < ambient_; ++i) rhs[i] = bc * p[i];
    rhs[ambient_] = aq;

    IntVec w(m, Int(0));
    for (std::size_t i = 0; i < m; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < m; ++j) s += bs.adj[i][j] * rhs[bs.selected[j]];
        w[i] = std::move(s);
    }
    for (auto row : bs.residual) {
        Int s = 0;
        for (std::size_t j = 0; j < m; ++j) s += bs.sys[row][j] * w[j];
        if (s != bs.det * rhs[row]) return std::nullopt;
    }
    return w;
}

MembershipClass VPolytope::classify_from_w(const IntVec& w) const {
    const Int& det = bary_->det;
    bool boundary = false;
    for (const auto& wj : w) {
        int sgn = wj.sign() * det.sign();
        if (sgn < 0) return MembershipClass::Outside;
        if (sgn == 0) boundary = true;
    }
    return boundary ? MembershipClass::RelativeBoundary : MembershipClass::RelativeInterior;
}

MembershipClass VPolytope::membership(const Vec& x) const { return membership_dilated(x, 1); }

MembershipClass VPolytope::membership_dilated(const Vec& x, const Rational& lam) const {
    if (x.size() != ambient_) throw std::invalid_argument("dimension mismatch");
    if (lam < 0) throw std::invalid_argument("negative dilation");
    if (lam == 0) {
        for (const auto& c : x)
            if (c != 0) return MembershipClass::Outside;
        return MembershipClass::RelativeInterior;  // the origin is its own relative interior
    }
    if (bary_) {
        Int q = 1;
        for (const auto& c : x) q = lcm_int(q, denominator(c));
        IntVec p(ambient_);
        for (std::size_t i = 0; i < ambient_; ++i) p[i] = numerator(Rational(x[i] * q));
        auto w = bary_solve(p, q, numerator(lam), denominator(lam));
        if (!w) return MembershipClass::Outside;
        return classify_from_w(*w);
    }
    if (facets_) {
        Vec z = vec_scale(Rational(1) / lam, x);
        auto y = local_coordinates(z);
        if (!y) return MembershipClass::Outside;
        bool boundary = false;
        for (const auto& f : facets_->facets) {
            Rational v = dot(f.normal, *y);
            if (v > f.offset) return MembershipClass::Outside;
            if (v == f.offset) boundary = true;
        }
        return boundary ? MembershipClass::RelativeBoundary : MembershipClass::RelativeInterior;
    }
    if (!lp_contains(x, lam)) return MembershipClass::Outside;
    throw UnsupportedQueryError(
        "unclassified-inside: point is in the polytope, but boundary/interior "
        "classification needs facets, which are only enumerated up to affine dimension 4");
}

bool VPolytope::contains_dilated(const Vec& x, const Rational& lam) const {
    if (bary_ || facets_) return membership_dilated(x, lam) != MembershipClass::Outside;
    if (lam == 0) {
        for (const auto& c : x)
            if (c != 0) return false;
        return true;
    }
    return lp_contains(x, lam);
}

MembershipClass VPolytope::classify_lattice_point(const IntVec& x, const Int& a, const Int& b) const {
    if (bary_ && a > 0) {
        auto w = bary_solve(x, 1, a, b);
        if (!w) return MembershipClass::Outside;
        return classify_from_w(*w);
    }
    Vec xr(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) xr[i] = Rational(x[i]);
    return membership_dilated(xr, Rational(a, b));
}

bool VPolytope::contains_lattice_point(const IntVec& x, const Int& a, const Int& b) const {
    if (bary_ && a > 0) return classify_lattice_point(x, a, b) != MembershipClass::Outside;
    Vec xr(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) xr[i] = Rational(x[i]);
    return contains_dilated(xr, Rational(a, b));
}

bool VPolytope::lp_contains(const Vec& x, const Rational& lam) const {
    const std::size_t m = pts_.size();
    std::vector<LinearConstraint> cons;
    for (std::size_t j = 0; j < m; ++j) {
        Vec e(m);
        e[j] = 1;
        cons.push_back({std::move(e), Rel::GE, 0});
    }
    cons.push_back({Vec(m, Rational(1)), Rel::EQ, 1});
    for (std::size_t i = 0; i < ambient_; ++i) {
        Vec row(m);
        for (std::size_t j = 0; j < m; ++j) row[j] = lam * pts_[j][i];
        cons.push_back({std::move(row), Rel::EQ, x[i]});
    }
    return lp_feasible(cons, m);
}

std::optional<Vec> VPolytope::barycentric(const Vec& x) const {
    if (!simplex_) throw std::logic_error("barycentric coordinates need a simplex");
    if (x.size() != ambient_) throw std::invalid_argument("dimension mismatch");
    Int q = 1;
    for (const auto& c : x) q = lcm_int(q, denominator(c));
    IntVec p(ambient_);
    for (std::size_t i = 0; i < ambient_; ++i) p[i] = numerator(Rational(x[i] * q));
    auto w = bary_solve(p, q, 1, 1);
    if (!w) return std::nullopt;
    Vec mu(pts_.size());
    const Int denom = bary_->det * q;
    for (std::size_t j = 0; j < pts_.size(); ++j) mu[j] = rat((*w)[j], denom);
    return mu;
}

bool VPolytope::in_affine_hull(const Vec& x) const {
    if (x.size() != ambient_) throw std::invalid_argument("dimension mismatch");
    std::vector<Vec> rows;
    for (std::size_t j = 1; j < pts_.size(); ++j) rows.push_back(vec_sub(pts_[j], pts_[0]));
    Vec diff = vec_sub(x, pts_[0]);
    if (rows.empty()) return diff == Vec(ambient_, Rational(0));
    Mat m = Mat::from_rows(rows);
    rows.push_back(diff);
    Mat ext = Mat::from_rows(rows);
    return rank(m) == rank(ext);
}

VPolytope VPolytope::dilate(const Rational& lam) const {
    if (lam < 0) throw std::invalid_argument("negative dilation factor");
    if (lam == 0) return from_points({Vec(ambient_, Rational(0))});
    std::vector<Vec> pts;
    for (const auto& v : pts_) pts.push_back(vec_scale(lam, v));
    return from_points(std::move(pts));
}

VPolytope VPolytope::translate(const Vec& t) const {
    if (t.size() != ambient_) throw std::invalid_argument("dimension mismatch");
    std::vector<Vec> pts;
    for (const auto& v : pts_) pts.push_back(vec_add(v, t));
    return from_points(std::move(pts));
}

VPolytope VPolytope::project_last_to_zero() const {
    std::vector<Vec> pts = pts_;
    for (auto& v : pts) v[ambient_ - 1] = 0;
    return from_points(std::move(pts));
}

VPolytope VPolytope::drop_last() const {
    if (ambient_ < 2) throw std::invalid_argument("cannot drop the only coordinate");
    std::vector<Vec> pts;
    for (const auto& v : pts_) pts.push_back(Vec(v.begin(), v.end() - 1));
    return from_points(std::move(pts));
}

VPolytope VPolytope::lift_append_zero() const {
    std::vector<Vec> pts;
    for (const auto& v : pts_) {
        Vec w = v;
        w.push_back(0);
        pts.push_back(std::move(w));
    }
    return from_points(std::move(pts));
}

Int VPolytope::normalized_volume() const {
    if (!simplex_) throw UnsupportedQueryError("normalized volume is defined here only for simplices");
    if (!lattice_) throw UnsupportedQueryError("normalized volume needs integer vertices");
    const std::size_t d = affine_dim_;
    if (d == 0) return 1;
    // edge matrix, ambient x d, integer
    std::vector<IntVec> edges(ambient_, IntVec(d));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < ambient_; ++i)
            edges[i][j] = numerator(Rational(pts_[j + 1][i] - pts_[0][i]));
    // gcd of all maximal minors = index of the edge lattice in the affine
    // hull's lattice = normalized volume
    Int g = 0;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    do {
        std::vector<IntVec> minor(d, IntVec(d));
        for (std::size_t i = 0; i < d; ++i) minor[i] = edges[idx[i]];
        Int det = bareiss_int_det(std::move(minor));
        if (det < 0) det = -det;
        g = gcd(g, det);
    } while (next_combination(idx, ambient_));
    assert(g > 0);
    return g;
}

Vec to_vec(const std::vector<int>& entries) {
    Vec v(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) v[i] = entries[i];
    return v;
}

Vec to_vec(const Permutation& p) { return to_vec(p.entries()); }

VPolytope orbit_polytope(const Permutation& p) {
    std::vector<Vec> pts;
    for (const auto& q : sort_orbit(p).steps) pts.push_back(to_vec(q));
    return VPolytope::from_points(std::move(pts));
}

}  // namespace stacksimplex
