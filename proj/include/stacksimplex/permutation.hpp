#pragma once

#include <compare>
#include <string>
#include <vector>

#include "stacksimplex/errors.hpp"

namespace stacksimplex {

// A permutation of {1, ..., n} in one-line notation.
class Permutation {
public:
    explicit Permutation(std::vector<int> entries);

    static Permutation identity(int n);

    // "23451" for n <= 9, comma-separated ("2,3,11,...,1") otherwise.
    // Either form is accepted on input.
    static Permutation parse(const std::string& s);
    std::string str() const;

    int size() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[i]; }  // 0-based position
    const std::vector<int>& entries() const { return e_; }
    bool is_identity() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> e_;
};

// One pass of the LIFO sorting map: scan left to right, popping the stack to
// the output while the incoming entry exceeds the top, then push; flush the
// stack at the end.
Permutation stack_sort(const Permutation& p);

// The trajectory of a permutation under repeated stack_sort, ending at the
// identity.  index == number of applications needed == steps.size() - 1.
struct SortOrbit {
    std::vector<Permutation> steps;  // input first, identity last, all distinct
    int index() const { return static_cast<int>(steps.size()) - 1; }
};

SortOrbit sort_orbit(const Permutation& p);

// True iff exactly t passes are needed (t-sortable but not (t-1)-sortable).
bool is_exactly_t_sortable(const Permutation& p, int t);

// Permutations ending with n followed by 1.  Defined only for n >= 3; for
// n < 3 the answer is false by decision (the two-element case is degenerate).
bool is_ln1(const Permutation& p);

// All permutations of {1..n} ending with (n, 1), lexicographically sorted.
// Throws std::invalid_argument for n < 3.  There are (n-2)! of them.
std::vector<Permutation> enumerate_ln1(int n);

// 2 3 ... n 1.  Throws std::invalid_argument for n < 2.
Permutation tau(int n);

// After i sorting passes a permutation ending in (n, 1) ends with exactly the
// suffix (n-i), 1, (n-i+1), ..., n.  Checks that, for 1 <= i <= n-2.  Throws
// std::invalid_argument if p does not end with (n, 1).
bool tail_form_check(const Permutation& p, int i);

// Number of positions j with p[j] > p[j+1].
int descent_count(const Permutation& p);

}  // namespace stacksimplex
