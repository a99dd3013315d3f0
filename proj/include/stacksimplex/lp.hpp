#pragma once

#include <vector>

#include "stacksimplex/linalg.hpp"

namespace stacksimplex {

enum class Rel { LE, EQ, GE };

struct LinearConstraint {
    Vec coeffs;
    Rel rel;
    Rational rhs;
};

// Exact feasibility of { x in Q^dim : every constraint holds }.  Free
// variables are split into nonnegative pairs, rows get slack/surplus and
// artificial variables, and phase-1 simplex minimizes the artificial sum.
// Bland's rule keeps the pivoting finite; all arithmetic is rational, so
// the answer is a certainty, not a tolerance.
bool lp_feasible(const std::vector<LinearConstraint>& constraints, std::size_t dim);

}  // namespace stacksimplex
