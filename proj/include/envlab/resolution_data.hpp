#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "envlab/field.hpp"

namespace envlab {

/// Degrees (a_1..a_{k+1}; b_1..b_k) of a length-1 graded free resolution
/// 0 -> (+) S(-b_j) -> (+) S(-a_i) -> I -> 0 of the ideal of a point
/// arrangement. Both lists ascending; the column sums agree.
struct ResolutionData {
    std::vector<int> a;
    std::vector<int> b;

    int k() const { return static_cast<int>(b.size()); }

    void validate() const {
        if (b.empty() || a.size() != b.size() + 1)
            throw MathError("resolution data: need k+1 generator degrees and k >= 1 syzygy degrees");
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] <= 0) throw MathError("resolution data: generator degrees must be positive");
            if (i && a[i] < a[i - 1]) throw MathError("resolution data: generator degrees not ascending");
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] <= 0) throw MathError("resolution data: syzygy degrees must be positive");
            if (j && b[j] < b[j - 1]) throw MathError("resolution data: syzygy degrees not ascending");
        }
        const long sa = std::accumulate(a.begin(), a.end(), 0L);
        const long sb = std::accumulate(b.begin(), b.end(), 0L);
        if (sa != sb) throw MathError("resolution data: degree sums differ");
    }

    bool operator==(const ResolutionData& o) const { return a == o.a && b == o.b; }
};

/// max a < min b; the regime where the main genericity theorem applies.
inline bool is_positive(const ResolutionData& R) {
    return R.a.back() < R.b.front();
}

/// n = (sum b^2 - sum a^2)/2, the length of the arrangement cut out by a
/// general matrix with these degrees.
inline int points_count(const ResolutionData& R) {
    long s = 0;
    for (int b : R.b) s += static_cast<long>(b) * b;
    for (int a : R.a) s -= static_cast<long>(a) * a;
    if (s <= 0 || s % 2 != 0) throw MathError("resolution data: point-count identity fails");
    return static_cast<int>(s / 2);
}

/// r(d) = #{ a_i <= d }.
inline int r_of(const ResolutionData& R, int d) {
    int r = 0;
    for (int ai : R.a)
        if (ai <= d) ++r;
    return r;
}

inline std::string format_resolution_data(const ResolutionData& R) {
    std::ostringstream os;
    os << "a=";
    for (std::size_t i = 0; i < R.a.size(); ++i) os << (i ? "," : "") << R.a[i];
    os << " b=";
    for (std::size_t j = 0; j < R.b.size(); ++j) os << (j ? "," : "") << R.b[j];
    return os.str();
}

namespace detail {

inline std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = std::min(s.find(',', pos), s.size());
        const std::string tok = s.substr(pos, comma - pos);
        if (tok.empty()) throw InputError(std::string("empty entry in ") + what + " list");
        char* end = nullptr;
        const long v = std::strtol(tok.c_str(), &end, 10);
        if (end == tok.c_str() || *end != '\0')
            throw InputError(std::string("bad integer '") + tok + "' in " + what + " list");
        out.push_back(static_cast<int>(v));
        pos = comma + 1;
    }
    return out;
}

} // namespace detail

/// Parses the textual form `a=3,3,4 b=5,5` (whitespace-separated tokens).
inline ResolutionData parse_resolution_data(const std::string& text) {
    ResolutionData R;
    bool have_a = false, have_b = false;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok.rfind("a=", 0) == 0) {
            R.a = detail::parse_int_list(tok.substr(2), "a");
            have_a = true;
        } else if (tok.rfind("b=", 0) == 0) {
            R.b = detail::parse_int_list(tok.substr(2), "b");
            have_b = true;
        } else {
            throw InputError("resolution data: unexpected token '" + tok + "' (want a=... b=...)");
        }
    }
    if (!have_a || !have_b) throw InputError("resolution data: need both a=... and b=...");
    try {
        R.validate();
    } catch (const MathError& e) {
        throw InputError(e.what());
    }
    return R;
}

} // namespace envlab
