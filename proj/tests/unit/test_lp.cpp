#include <doctest.h>

#include "stacksimplex/lp.hpp"

using namespace stacksimplex;

namespace {
LinearConstraint c(std::initializer_list<int> coeffs, Rel rel, int rhs) {
    LinearConstraint lc;
    for (int v : coeffs) lc.coeffs.push_back(Rational(v));
    lc.rel = rel;
    lc.rhs = Rational(rhs);
    return lc;
}
}  // namespace

TEST_CASE("feasible systems") {
    // 1 <= x <= 3
    CHECK(lp_feasible({c({1}, Rel::GE, 1), c({1}, Rel::LE, 3)}, 1));
    // x + y = 1, x - y = 0  ->  x = y = 1/2
    CHECK(lp_feasible({c({1, 1}, Rel::EQ, 1), c({1, -1}, Rel::EQ, 0)}, 2));
    // negative corner: x <= -2 is fine for a free variable
    CHECK(lp_feasible({c({1}, Rel::LE, -2)}, 1));
    // empty constraint set
    CHECK(lp_feasible({}, 3));
}

TEST_CASE("infeasible systems") {
    CHECK_FALSE(lp_feasible({c({1}, Rel::GE, 2), c({1}, Rel::LE, 1)}, 1));
    CHECK_FALSE(lp_feasible({c({1, 1}, Rel::EQ, 1), c({1, 1}, Rel::EQ, 2)}, 2));
    // x + y <= 1, x >= 1, y >= 1
    CHECK_FALSE(lp_feasible(
        {c({1, 1}, Rel::LE, 1), c({1, 0}, Rel::GE, 1), c({0, 1}, Rel::GE, 1)}, 2));
}

TEST_CASE("feasibility agrees with a small grid scan") {
    // region: 2x + 3y <= 12, x - y >= -1, y >= 0 ; scan x,y in -3..5 for a point
    std::vector<LinearConstraint> sys{c({2, 3}, Rel::LE, 12), c({1, -1}, Rel::GE, -1),
                                      c({0, 1}, Rel::GE, 0)};
    bool grid_hit = false;
    for (int x = -3; x <= 5; ++x)
        for (int y = -3; y <= 5; ++y) {
            if (2 * x + 3 * y <= 12 && x - y >= -1 && y >= 0) grid_hit = true;
        }
    CHECK(lp_feasible(sys, 2) == grid_hit);

    // and a shifted copy made empty: 2x + 3y <= -100 with x,y >= 10
    std::vector<LinearConstraint> empty{c({2, 3}, Rel::LE, -100), c({1, 0}, Rel::GE, 10),
                                        c({0, 1}, Rel::GE, 10)};
    CHECK_FALSE(lp_feasible(empty, 2));
}
