#include "stacksimplex/rational.hpp"

#include <cctype>

namespace stacksimplex {

std::string to_string(const Int& n) { return n.str(); }

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Int parse_int(const std::string& s) {
    if (!valid_integer_token(s)) throw ParseError("not an integer: '" + s + "'");
    return Int(s);
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw ParseError("not a rational: '" + s + "'");
    Int d(den);
    if (d <= 0) throw ParseError("denominator must be positive: '" + s + "'");
    return Rational(Int(num), d);
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

Int rat_floor(const Rational& r) {
    Int q = numerator(r) / denominator(r);  // truncates toward zero
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

Int rat_ceil(const Rational& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) > 0 && q * denominator(r) != numerator(r)) ++q;
    return q;
}

}  // namespace stacksimplex
