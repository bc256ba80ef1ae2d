#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "envlab/field.hpp"

namespace envlab {

/// Exponent vector; total degree is the sum of entries.
using Monomial = std::vector<int>;

inline int monomial_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

namespace detail {

inline constexpr int kBinomialMax = 96;

inline const std::array<std::array<std::int64_t, kBinomialMax>, kBinomialMax>& pascal_table() {
    static const auto table = [] {
        std::array<std::array<std::int64_t, kBinomialMax>, kBinomialMax> t{};
        for (int n = 0; n < kBinomialMax; ++n) {
            t[n][0] = 1;
            for (int k = 1; k <= n; ++k) {
                t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
            }
        }
        return t;
    }();
    return table;
}

} // namespace detail

/// Binomial coefficients; the sizes used here stay far below 64-bit overflow.
inline std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (n < detail::kBinomialMax) return detail::pascal_table()[n][k];
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Number of monomials of total degree d in nvars variables.
inline std::int64_t monomial_count(int nvars, int d) {
    if (d < 0) return 0;
    return binomial(d + nvars - 1, nvars - 1);
}

/// All monomials of total degree d in nvars variables, in descending
/// lexicographic order (x1 > x2 > ...). The order is the tie-break of the
/// graded-lex order restricted to one degree, and is the basis order used
/// by every dense coefficient vector in this library.
inline std::vector<Monomial> monomial_basis(int nvars, int d) {
    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(monomial_count(nvars, d)));
    Monomial cur(nvars, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == nvars - 1) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    rec(rec, 0, d);
    return out;
}

/// Shared, lazily built copy of monomial_basis(nvars, d). Hot paths iterate
/// bases of the same degree thousands of times; building once matters.
inline const std::vector<Monomial>& monomial_basis_cached(int nvars, int d) {
    static std::map<std::pair<int, int>, std::vector<Monomial>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({nvars, d});
    if (it == cache.end()) it = cache.emplace(std::make_pair(nvars, d), monomial_basis(nvars, d)).first;
    return it->second;
}

/// Rank of a monomial within monomial_basis(nvars, deg(m)); the inverse of
/// the basis enumeration, computed combinatorially (no table lookups on the
/// basis itself).
inline std::uint32_t monomial_rank(const Monomial& m) {
    int nvars = static_cast<int>(m.size());
    int d = monomial_degree(m);
    std::int64_t rank = 0;
    for (int pos = 0; pos + 1 < nvars; ++pos) {
        // monomials whose exponent at `pos` exceeds m[pos] come first
        for (int e = d; e > m[pos]; --e) {
            rank += monomial_count(nvars - pos - 1, d - e);
        }
        d -= m[pos];
    }
    return static_cast<std::uint32_t>(rank);
}

} // namespace envlab
