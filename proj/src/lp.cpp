#include "stacksimplex/lp.hpp"

#include <stdexcept>

namespace stacksimplex {

namespace {

struct Tableau {
    // rows: m x (ncols + 1), last column is the rhs.
    std::vector<Vec> t;
    Vec red;  // reduced costs of the phase-1 objective, length ncols
    std::vector<std::size_t> basis;
    std::size_t ncols;

    std::size_t rhs() const { return ncols; }

    void pivot(std::size_t prow, std::size_t pcol) {
        Rational inv = Rational(1) / t[prow][pcol];
        for (auto& v : t[prow]) v *= inv;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i == prow || t[i][pcol] == 0) continue;
            Rational f = t[i][pcol];
            for (std::size_t j = 0; j <= ncols; ++j) t[i][j] -= f * t[prow][j];
        }
        if (red[pcol] != 0) {
            Rational f = red[pcol];
            for (std::size_t j = 0; j < ncols; ++j) red[j] -= f * t[prow][j];
        }
        basis[prow] = pcol;
    }
};

}  // namespace

bool lp_feasible(const std::vector<LinearConstraint>& constraints, std::size_t dim) {
    for (const auto& c : constraints)
        if (c.coeffs.size() != dim) throw std::invalid_argument("constraint dimension mismatch");

    const std::size_t m = constraints.size();
    if (m == 0) return true;

    std::size_t nslack = 0;
    for (const auto& c : constraints)
        if (c.rel != Rel::EQ) ++nslack;

    // columns: [u_0..u_{d-1} | w_0..w_{d-1} | slacks | artificials]
    const std::size_t ncols = 2 * dim + nslack + m;
    const std::size_t art0 = 2 * dim + nslack;

    Tableau tab;
    tab.ncols = ncols;
    tab.t.assign(m, Vec(ncols + 1));
    tab.basis.assign(m, 0);

    std::size_t next_slack = 2 * dim;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = constraints[i];
        // flip the row if needed so the rhs is nonnegative
        bool flip = c.rhs < 0;
        Rational sgn = flip ? -1 : 1;
        for (std::size_t j = 0; j < dim; ++j) {
            tab.t[i][j] = sgn * c.coeffs[j];
            tab.t[i][dim + j] = -sgn * c.coeffs[j];
        }
        tab.t[i][ncols] = sgn * c.rhs;
        Rel rel = c.rel;
        if (flip && rel != Rel::EQ) rel = (rel == Rel::LE) ? Rel::GE : Rel::LE;
        if (rel == Rel::LE)
            tab.t[i][next_slack++] = 1;
        else if (rel == Rel::GE)
            tab.t[i][next_slack++] = -1;
        tab.t[i][art0 + i] = 1;
        tab.basis[i] = art0 + i;
    }

    // phase-1 reduced costs: r_j = c_j - sum_i a_ij with c = 1 on artificials
    tab.red.assign(ncols, Rational(0));
    for (std::size_t j = 0; j < ncols; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < m; ++i) s += tab.t[i][j];
        tab.red[j] = (j >= art0 ? Rational(1) : Rational(0)) - s;
    }

    const std::size_t iteration_cap = 200000;
    bool optimal = false;
    for (std::size_t iter = 0; iter < iteration_cap && !optimal; ++iter) {
        // Bland: entering = lowest-index column with negative reduced cost
        std::size_t enter = ncols;
        for (std::size_t j = 0; j < ncols; ++j)
            if (tab.red[j] < 0) {
                enter = j;
                break;
            }
        if (enter == ncols) {
            optimal = true;
            break;
        }

        // ratio test; Bland tie-break on the basic variable's index
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (tab.t[i][enter] <= 0) continue;
            Rational ratio = tab.t[i][tab.rhs()] / tab.t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && tab.basis[i] < tab.basis[leave]))
                leave = i, best = ratio;
        }
        if (leave == m)
            throw std::logic_error("phase-1 objective unbounded");  // cannot happen: bounded below by 0
        tab.pivot(leave, enter);
    }
    if (!optimal) throw std::logic_error("simplex iteration cap exceeded");

    Rational art_sum = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (tab.basis[i] >= art0) art_sum += tab.t[i][tab.rhs()];
    return art_sum == 0;
}

}  // namespace stacksimplex
