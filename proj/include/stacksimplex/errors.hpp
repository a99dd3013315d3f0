#pragma once

#include <stdexcept>
#include <string>

namespace stacksimplex {

// Bad user-supplied input (malformed permutation, rational, spec string, file).
// The CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input was well-formed but the requested computation is outside what this
// library supports (e.g. relative-interior classification of a non-simplex
// with affine dimension above the facet-enumeration cap).  CLI exit code 3.
struct UnsupportedQueryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// solve_linear: the system is consistent but the solution is not unique.
// Deliberately distinct from the "inconsistent" outcome (which is not an
// error, just an empty result).
struct UnderdeterminedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace stacksimplex
