#include "stacksimplex/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace stacksimplex {

Permutation::Permutation(std::vector<int> entries) : e_(std::move(entries)) {
    if (e_.empty()) throw std::invalid_argument("empty permutation");
    std::vector<bool> seen(e_.size(), false);
    for (int v : e_) {
        if (v < 1 || v > static_cast<int>(e_.size()) || seen[v - 1])
            throw std::invalid_argument("not a permutation of {1..n}");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
}

Permutation Permutation::parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty permutation string");
    std::vector<int> e;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
                    return std::isdigit(c);
                }))
                throw ParseError("bad permutation entry: '" + tok + "'");
            e.push_back(std::stoi(tok));
        }
    } else {
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
                throw ParseError("bad permutation string: '" + s + "'");
            e.push_back(c - '0');
        }
    }
    try {
        return Permutation(std::move(e));
    } catch (const std::invalid_argument& ex) {
        throw ParseError(std::string(ex.what()) + ": '" + s + "'");
    }
}

std::string Permutation::str() const {
    std::string out;
    if (size() <= 9) {
        for (int v : e_) out += static_cast<char>('0' + v);
    } else {
        for (int i = 0; i < size(); ++i) {
            if (i) out += ',';
            out += std::to_string(e_[i]);
        }
    }
    return out;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (e_[i] != i + 1) return false;
    return true;
}

Permutation stack_sort(const Permutation& p) {
    std::vector<int> out, stack;
    out.reserve(p.size());
    for (int v : p.entries()) {
        while (!stack.empty() && v > stack.back()) {
            out.push_back(stack.back());
            stack.pop_back();
        }
        stack.push_back(v);
    }
    while (!stack.empty()) {
        out.push_back(stack.back());
        stack.pop_back();
    }
    return Permutation(std::move(out));
}

SortOrbit sort_orbit(const Permutation& p) {
    SortOrbit orbit;
    orbit.steps.push_back(p);
    // n-1 passes always suffice; the +1 margin makes an infinite loop here a
    // loud failure instead of a hang.
    const int cap = p.size() + 1;
    while (!orbit.steps.back().is_identity()) {
        if (static_cast<int>(orbit.steps.size()) > cap)
            throw std::logic_error("sorting did not terminate");
        orbit.steps.push_back(stack_sort(orbit.steps.back()));
    }
    return orbit;
}

bool is_exactly_t_sortable(const Permutation& p, int t) {
    return sort_orbit(p).index() == t;
}

bool is_ln1(const Permutation& p) {
    const int n = p.size();
    if (n < 3) return false;
    return p[n - 2] == n && p[n - 1] == 1;
}

std::vector<Permutation> enumerate_ln1(int n) {
    if (n < 3) throw std::invalid_argument("enumerate_ln1 requires n >= 3");
    std::vector<int> mid(n - 2);
    std::iota(mid.begin(), mid.end(), 2);  // 2, 3, ..., n-1
    std::vector<Permutation> out;
    do {
        std::vector<int> e = mid;
        e.push_back(n);
        e.push_back(1);
        out.emplace_back(std::move(e));
    } while (std::next_permutation(mid.begin(), mid.end()));
    return out;
}

Permutation tau(int n) {
    if (n < 2) throw std::invalid_argument("tau requires n >= 2");
    std::vector<int> e(n);
    for (int i = 0; i + 1 < n; ++i) e[i] = i + 2;
    e[n - 1] = 1;
    return Permutation(std::move(e));
}

bool tail_form_check(const Permutation& p, int i) {
    const int n = p.size();
    if (!is_ln1(p)) throw std::invalid_argument("tail_form_check requires a permutation ending (n, 1)");
    if (i < 1 || i > n - 2) throw std::invalid_argument("tail_form_check requires 1 <= i <= n-2");
    Permutation q = p;
    for (int k = 0; k < i; ++k) q = stack_sort(q);
    // expected suffix: (n-i), 1, (n-i+1), ..., n occupying the last i+2 slots
    std::vector<int> suffix;
    suffix.push_back(n - i);
    suffix.push_back(1);
    for (int v = n - i + 1; v <= n; ++v) suffix.push_back(v);
    const int start = n - static_cast<int>(suffix.size());
    for (std::size_t j = 0; j < suffix.size(); ++j)
        if (q[start + static_cast<int>(j)] != suffix[j]) return false;
    return true;
}

int descent_count(const Permutation& p) {
    int d = 0;
    for (int i = 0; i + 1 < p.size(); ++i)
        if (p[i] > p[i + 1]) ++d;
    return d;
}

}  // namespace stacksimplex
