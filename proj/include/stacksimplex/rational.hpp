#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "stacksimplex/errors.hpp"

namespace stacksimplex {

// Arbitrary-precision integers and rationals.  cpp_rational keeps values in
// lowest terms with a positive denominator, which is exactly the invariant
// the rest of the library relies on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Int& n);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Accepts "p" or "p/q" with optional sign on p; q must be positive after
// normalization ("3/-2" is rejected, "-3/2" is fine).  Throws ParseError.
Rational parse_rational(const std::string& s);

Int parse_int(const std::string& s);

bool is_integer(const Rational& r);

// Largest integer <= r / smallest integer >= r.
Int rat_floor(const Rational& r);
Int rat_ceil(const Rational& r);

// Safe (numerator, denominator) construction.  The underlying rational type
// rejects negative denominators outright (its overflow guard compares against
// numeric_limits<cpp_int>::max(), which is 0 for an unbounded type), so the
// sign is moved onto the numerator first.
inline Rational rat(Int num, Int den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

}  // namespace stacksimplex
