#include "stacksimplex/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace stacksimplex {

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat(0, 0);
    Mat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols) {
    if (cols.empty()) return Mat(0, 0);
    Mat m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows()) throw std::invalid_argument("ragged columns");
        for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec Mat::row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

Vec Mat::apply(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch");
    Vec y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

namespace {

// Reduced row echelon form in place; returns pivot column of each pivot row.
std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rational inv = Rational(1) / m.at(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::optional<Vec> solve_linear(const Mat& a, const Vec& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("dimension mismatch");
    Mat aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto pivots = rref(aug);
    // A pivot in the rhs column marks an inconsistent row.
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    for (std::size_t i = pivots.size(); i < a.rows(); ++i)
        if (aug.at(i, a.cols()) != 0) return std::nullopt;
    if (pivots.size() < a.cols())
        throw UnderdeterminedError("underdetermined system: solution not unique");
    Vec x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, a.cols());
    return x;
}

namespace {

// Fraction-free elimination over the integers.  Every division below is
// exact by the Bareiss identity.
Int bareiss_determinant(std::vector<IntVec> m) {
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

Rational determinant(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = a.rows();
    std::vector<IntVec> m(n, IntVec(n));
    Rational scale = 1;  // det(original) = det(scaled) / scale
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j) l = lcm_int(l, denominator(a.at(i, j)));
        if (l == 0) l = 1;
        scale *= l;
        for (std::size_t j = 0; j < n; ++j) {
            Rational v = a.at(i, j) * l;
            assert(denominator(v) == 1);
            m[i][j] = numerator(v);
        }
    }
    return Rational(bareiss_determinant(std::move(m))) / scale;
}

bool is_unimodular(const Mat& a) {
    if (a.rows() != a.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!is_integer(a.at(i, j))) return false;
    Rational d = determinant(a);
    return d == 1 || d == -1;
}

std::size_t rank(const Mat& a) {
    Mat m = a;
    return rref(m).size();
}

std::vector<Vec> nullspace(const Mat& a) {
    Mat m = a;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(a.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat inverse(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = a.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] >= n)
        throw std::invalid_argument("matrix is singular");
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

Vec vec_sub(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
    Vec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
    return z;
}

Vec vec_add(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
    Vec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
    return z;
}

Vec vec_scale(const Rational& c, const Vec& x) {
    Vec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = c * x[i];
    return z;
}

Rational dot(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

}  // namespace stacksimplex
