#pragma once

#include <optional>
#include <vector>

#include "envlab/field.hpp"

namespace envlab {

/// Row-major dense matrix over F_p.
using DenseMatrix = std::vector<std::vector<Scalar>>;

struct Echelon {
    DenseMatrix rows;        // nonzero rows in reduced row-echelon form
    std::vector<int> pivots; // pivot column of each row, strictly increasing
    int cols = 0;

    int rank() const { return static_cast<int>(rows.size()); }
};

/// Reduced row-echelon form with deterministic pivoting (first nonzero).
inline Echelon rref(const PrimeField& F, DenseMatrix m, int cols) {
    Echelon e;
    e.cols = cols;
    std::size_t r = 0;
    for (int c = 0; c < cols && r < m.size(); ++c) {
        std::size_t sel = r;
        while (sel < m.size() && m[sel][c] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        const Scalar inv = F.inv(m[r][c]);
        for (int j = c; j < cols; ++j) m[r][j] = F.mul(m[r][j], inv);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Scalar f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[r][j]));
        }
        e.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    e.rows = std::move(m);
    return e;
}

inline int rank_of(const PrimeField& F, const DenseMatrix& m, int cols) {
    return rref(F, m, cols).rank();
}

/// Normal form of a vector against an RREF basis: subtract pivot rows until
/// every pivot coordinate vanishes.
inline std::vector<Scalar> normal_form(const PrimeField& F, const Echelon& e, std::vector<Scalar> v) {
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        const Scalar c = v[e.pivots[i]];
        if (c == 0) continue;
        for (int j = 0; j < e.cols; ++j) v[j] = F.sub(v[j], F.mul(c, e.rows[i][j]));
    }
    return v;
}

/// Basis of the right kernel, itself returned in reduced echelon form.
inline DenseMatrix kernel_basis(const PrimeField& F, const DenseMatrix& m, int cols) {
    const Echelon e = rref(F, m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (int p : e.pivots) is_pivot[p] = true;
    DenseMatrix basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Scalar> v(cols, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) {
            if (e.rows[i][c] != 0) v[e.pivots[i]] = F.neg(e.rows[i][c]);
        }
        basis.push_back(std::move(v));
    }
    return rref(F, std::move(basis), cols).rows;
}

inline std::vector<Scalar> mat_vec(const PrimeField& F, const DenseMatrix& m, const std::vector<Scalar>& v) {
    std::vector<Scalar> out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        Scalar s = 0;
        for (std::size_t j = 0; j < v.size(); ++j) s = F.add(s, F.mul(m[i][j], v[j]));
        out[i] = s;
    }
    return out;
}

inline DenseMatrix mat_mul(const PrimeField& F, const DenseMatrix& a, const DenseMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    DenseMatrix out(n, std::vector<Scalar>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            const Scalar f = a[i][t];
            for (std::size_t j = 0; j < m; ++j) out[i][j] = F.add(out[i][j], F.mul(f, b[t][j]));
        }
    return out;
}

inline std::optional<DenseMatrix> mat_inverse(const PrimeField& F, DenseMatrix m) {
    const std::size_t n = m.size();
    DenseMatrix inv(n, std::vector<Scalar>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m[sel][c] == 0) ++sel;
        if (sel == n) return std::nullopt;
        std::swap(m[c], m[sel]);
        std::swap(inv[c], inv[sel]);
        const Scalar f = F.inv(m[c][c]);
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] = F.mul(m[c][j], f);
            inv[c][j] = F.mul(inv[c][j], f);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            const Scalar g = m[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] = F.sub(m[i][j], F.mul(g, m[c][j]));
                inv[i][j] = F.sub(inv[i][j], F.mul(g, inv[c][j]));
            }
        }
    }
    return inv;
}

inline Scalar determinant(const PrimeField& F, DenseMatrix m) {
    const std::size_t n = m.size();
    Scalar det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m[sel][c] == 0) ++sel;
        if (sel == n) return 0;
        if (sel != c) {
            std::swap(m[c], m[sel]);
            det = F.neg(det);
        }
        det = F.mul(det, m[c][c]);
        const Scalar f = F.inv(m[c][c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            const Scalar g = F.mul(m[i][c], f);
            for (std::size_t j = c; j < n; ++j) m[i][j] = F.sub(m[i][j], F.mul(g, m[c][j]));
        }
    }
    return det;
}

/// Univariate polynomial over F_p, coefficients ascending; [0] is constant.
using UniPoly = std::vector<Scalar>;

inline int poly_degree(const UniPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

inline UniPoly poly_trim(UniPoly p) {
    p.resize(static_cast<std::size_t>(poly_degree(p) + 1));
    return p;
}

inline UniPoly poly_derivative(const PrimeField& F, const UniPoly& p) {
    UniPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(F.mul(p[i], F.reduce(static_cast<std::int64_t>(i))));
    return poly_trim(std::move(d));
}

inline UniPoly poly_mod(const PrimeField& F, UniPoly a, const UniPoly& b) {
    const int db = poly_degree(b);
    if (db < 0) throw MathError("poly_mod: division by zero polynomial");
    const Scalar lead_inv = F.inv(b[db]);
    for (int i = poly_degree(a); i >= db; i = poly_degree(a)) {
        const Scalar f = F.mul(a[i], lead_inv);
        for (int j = 0; j <= db; ++j) a[i - db + j] = F.sub(a[i - db + j], F.mul(f, b[j]));
    }
    return poly_trim(std::move(a));
}

inline UniPoly poly_gcd(const PrimeField& F, UniPoly a, UniPoly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (poly_degree(b) >= 0) {
        UniPoly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    const int d = poly_degree(a);
    if (d >= 0) {
        const Scalar inv = F.inv(a[d]);
        for (auto& c : a) c = F.mul(c, inv);
    }
    return a;
}

/// Degree of the squarefree part = #distinct roots in the algebraic closure.
inline int squarefree_part_degree(const PrimeField& F, const UniPoly& p) {
    const UniPoly d = poly_derivative(F, p);
    if (poly_degree(d) < 0)
        throw MathError("squarefree test: derivative vanishes (characteristic too small)");
    return poly_degree(p) - poly_degree(poly_gcd(F, p, d));
}

inline bool is_squarefree(const PrimeField& F, const UniPoly& p) {
    return squarefree_part_degree(F, p) == poly_degree(p);
}

/// Characteristic polynomial det(tI - M) by evaluation at deg+1 points and
/// Lagrange interpolation; needs p > dim(M).
inline UniPoly char_poly(const PrimeField& F, const DenseMatrix& m) {
    const int n = static_cast<int>(m.size());
    if (static_cast<std::uint64_t>(n) + 1 > F.prime())
        throw MathError("char_poly: matrix dimension too large for the field");
    std::vector<Scalar> xs, ys;
    for (int t = 0; t <= n; ++t) {
        DenseMatrix a = m;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) a[i][j] = F.neg(a[i][j]);
            a[i][i] = F.add(a[i][i], static_cast<Scalar>(t));
        }
        xs.push_back(static_cast<Scalar>(t));
        ys.push_back(determinant(F, a));
    }
    // Lagrange interpolation on n+1 points
    UniPoly result(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i <= n; ++i) {
        UniPoly term{1};
        Scalar denom = 1;
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            // term *= (t - xs[j])
            UniPoly next(term.size() + 1, 0);
            for (std::size_t k = 0; k < term.size(); ++k) {
                next[k + 1] = F.add(next[k + 1], term[k]);
                next[k] = F.sub(next[k], F.mul(term[k], xs[j]));
            }
            term = std::move(next);
            denom = F.mul(denom, F.sub(xs[i], xs[j]));
        }
        const Scalar f = F.mul(ys[i], F.inv(denom));
        for (std::size_t k = 0; k < term.size(); ++k)
            result[k] = F.add(result[k], F.mul(f, term[k]));
    }
    return result;
}

} // namespace envlab
