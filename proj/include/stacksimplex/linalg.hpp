#pragma once

#include <optional>
#include <vector>

#include "stacksimplex/rational.hpp"

namespace stacksimplex {

using Vec = std::vector<Rational>;
using IntVec = std::vector<Int>;

// Dense rational matrix, row-major.  Small sizes only; everything here is
// exact arithmetic, no pivot-magnitude games needed.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(std::size_t n);
    static Mat from_rows(const std::vector<Vec>& rows);
    static Mat from_columns(const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec apply(const Vec& x) const;  // matrix * column vector

    bool operator==(const Mat&) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

// Unique exact solution of a*x = b for square or overdetermined systems.
// Returns nullopt when the system is inconsistent.  Throws
// UnderdeterminedError when it is consistent but the solution is not unique;
// callers that land there gave us a rank-deficient system, which is a usage
// bug, not a data condition.
std::optional<Vec> solve_linear(const Mat& a, const Vec& b);

// Exact determinant.  Rows are scaled to integers first, then eliminated
// fraction-free (Bareiss), so intermediate values stay divisions-exact.
Rational determinant(const Mat& a);

// True iff every entry is an integer and |det| = 1.
bool is_unimodular(const Mat& a);

std::size_t rank(const Mat& a);

// Basis of { x : a*x = 0 }.
std::vector<Vec> nullspace(const Mat& a);

// Inverse of a square nonsingular matrix.  Throws std::invalid_argument if
// singular or not square.
Mat inverse(const Mat& a);

Vec vec_sub(const Vec& x, const Vec& y);
Vec vec_add(const Vec& x, const Vec& y);
Vec vec_scale(const Rational& c, const Vec& x);
Rational dot(const Vec& x, const Vec& y);

}  // namespace stacksimplex
