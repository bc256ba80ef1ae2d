#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "envlab/form.hpp"
#include "envlab/linalg.hpp"

namespace envlab {

/// The degree-d piece of a graded subspace of S = F_p[x_0..x_{nvars-1}],
/// held as a canonical reduced-echelon basis of coefficient vectors.
struct GradedPiece {
    int nvars = 3;
    int degree = 0;
    Echelon ech;

    int dim() const { return ech.rank(); }

    std::vector<HomogeneousForm> forms(const PrimeField&) const {
        std::vector<HomogeneousForm> out;
        out.reserve(ech.rows.size());
        for (const auto& row : ech.rows) out.emplace_back(nvars, degree, row);
        return out;
    }
};

inline GradedPiece piece_zero(int nvars, int degree) {
    GradedPiece p;
    p.nvars = nvars;
    p.degree = degree;
    p.ech.cols = monomial_count(nvars, degree);
    return p;
}

inline GradedPiece piece_from_rows(const PrimeField& F, int nvars, int degree, DenseMatrix rows) {
    GradedPiece p;
    p.nvars = nvars;
    p.degree = degree;
    p.ech = rref(F, std::move(rows), monomial_count(nvars, degree));
    return p;
}

inline GradedPiece piece_from_forms(const PrimeField& F, int nvars, int degree,
                                    const std::vector<HomogeneousForm>& forms) {
    DenseMatrix rows;
    for (const auto& f : forms) {
        if (f.nvars() != nvars || f.degree() != degree)
            throw MathError("piece_from_forms: degree or variable-count mismatch");
        rows.push_back(f.coeffs());
    }
    return piece_from_rows(F, nvars, degree, std::move(rows));
}

inline GradedPiece piece_full(const PrimeField&, int nvars, int degree) {
    const int n = monomial_count(nvars, degree);
    GradedPiece p;
    p.nvars = nvars;
    p.degree = degree;
    p.ech.cols = n;
    p.ech.rows.assign(static_cast<std::size_t>(n), std::vector<Scalar>(n, 0));
    for (int i = 0; i < n; ++i) {
        p.ech.rows[i][i] = 1;
        p.ech.pivots.push_back(i);
    }
    return p;
}

namespace detail {

/// Coefficient vector of mu * f where f lives in degree d and mu is a
/// monomial; the result lives in degree d + |mu|.
inline std::vector<Scalar> shift_row(int nvars, int degree, const std::vector<Scalar>& row,
                                     const Monomial& mu) {
    const auto& src = monomial_basis_cached(nvars, degree);
    const int out_deg = degree + monomial_degree(mu);
    std::vector<Scalar> out(monomial_count(nvars, out_deg), 0);
    Monomial e(mu.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] == 0) continue;
        for (std::size_t v = 0; v < e.size(); ++v) e[v] = src[i][v] + mu[v];
        out[static_cast<std::size_t>(monomial_rank(e))] = row[i];
    }
    return out;
}

} // namespace detail

/// Reduced span of { m*F : F in V, m monomial of degree e - V.degree }.
inline GradedPiece piece_product(const PrimeField& F, const GradedPiece& V, int e) {
    if (e < V.degree) throw MathError("piece_product: target degree below piece degree");
    if (e == V.degree) return V;
    DenseMatrix rows;
    for (const auto& mu : monomial_basis_cached(V.nvars, e - V.degree))
        for (const auto& row : V.ech.rows)
            rows.push_back(detail::shift_row(V.nvars, V.degree, row, mu));
    return piece_from_rows(F, V.nvars, e, std::move(rows));
}

inline GradedPiece piece_sum(const PrimeField& F, const GradedPiece& V, const GradedPiece& W) {
    if (V.degree != W.degree || V.nvars != W.nvars)
        throw MathError("piece_sum: mismatched degree or variable count");
    DenseMatrix rows = V.ech.rows;
    rows.insert(rows.end(), W.ech.rows.begin(), W.ech.rows.end());
    return piece_from_rows(F, V.nvars, V.degree, std::move(rows));
}

inline int piece_intersection_dim(const PrimeField& F, const GradedPiece& V, const GradedPiece& W) {
    return V.dim() + W.dim() - piece_sum(F, V, W).dim();
}

/// Is W a subspace of V?
inline bool piece_contains(const PrimeField& F, const GradedPiece& V, const GradedPiece& W) {
    if (V.degree != W.degree || V.nvars != W.nvars) return false;
    for (const auto& row : W.ech.rows) {
        const auto nf = normal_form(F, V.ech, row);
        for (Scalar c : nf)
            if (c != 0) return false;
    }
    return true;
}

inline bool piece_equal(const PrimeField& F, const GradedPiece& V, const GradedPiece& W) {
    return V.dim() == W.dim() && piece_contains(F, V, W);
}

/// Hilbert-function values h(e) = dim (S/J)_e over consecutive degrees.
struct HilbertWindow {
    int start_degree = 0;
    std::vector<int> values;

    int value_at(int e) const {
        const int i = e - start_degree;
        if (i < 0 || i >= static_cast<int>(values.size()))
            throw MathError("hilbert window: degree out of range");
        return values[static_cast<std::size_t>(i)];
    }
    int last_degree() const { return start_degree + static_cast<int>(values.size()) - 1; }
};

/// Graded pieces of an ideal, produced on demand and cached by degree.
class IdealPieces {
public:
    virtual ~IdealPieces() = default;
    virtual int nvars() const = 0;

    const GradedPiece& piece(int degree) const {
        auto it = cache_.find(degree);
        if (it == cache_.end()) it = cache_.emplace(degree, compute(degree)).first;
        return it->second;
    }

    int hilbert_value(const PrimeField&, int e) const {
        return monomial_count(nvars(), e) - piece(e).dim();
    }

protected:
    virtual GradedPiece compute(int degree) const = 0;

private:
    mutable std::map<int, GradedPiece> cache_;
};

/// Ideal generated by finitely many graded pieces: J_e is built incrementally
/// as S_1 * J_{e-1} plus the generators living in degree e.
class GeneratedPieces final : public IdealPieces {
public:
    GeneratedPieces(const PrimeField& F, std::vector<GradedPiece> generators)
        : F_(F), gens_(std::move(generators)) {
        for (const auto& g : gens_) {
            if (g.nvars != nvars_and_check()) throw MathError("generators: mixed variable counts");
        }
    }

    GeneratedPieces(const PrimeField& F, const std::vector<HomogeneousForm>& forms) : F_(F) {
        std::map<int, std::vector<HomogeneousForm>> by_degree;
        int nv = 3;
        for (const auto& f : forms) {
            by_degree[f.degree()].push_back(f);
            nv = f.nvars();
        }
        for (const auto& [d, fs] : by_degree) gens_.push_back(piece_from_forms(F, nv, d, fs));
    }

    int nvars() const override { return gens_.empty() ? 3 : gens_[0].nvars; }

protected:
    GradedPiece compute(int degree) const override {
        GradedPiece cur = degree > min_degree() ? piece_product(F_, piece(degree - 1), degree)
                                                : piece_zero(nvars(), degree);
        for (const auto& g : gens_)
            if (g.degree == degree) cur = piece_sum(F_, cur, g);
        return cur;
    }

private:
    int min_degree() const {
        int m = 0;
        bool first = true;
        for (const auto& g : gens_) {
            if (first || g.degree < m) m = g.degree;
            first = false;
        }
        return first ? 1 : m;
    }
    int nvars_and_check() const { return gens_.empty() ? 3 : gens_[0].nvars; }

    const PrimeField& F_;
    std::vector<GradedPiece> gens_;
};

inline HilbertWindow hilbert_window(const PrimeField& F, const std::vector<GradedPiece>& generators,
                                    int e_from, int e_to) {
    if (e_from > e_to) throw MathError("hilbert_window: empty window");
    GeneratedPieces J(F, generators);
    HilbertWindow H;
    H.start_degree = e_from;
    for (int e = e_from; e <= e_to; ++e) H.values.push_back(J.hilbert_value(F, e));
    return H;
}

enum class GrowthKind { NotStabilized, Finite, Dim1 };

struct Growth {
    GrowthKind kind = GrowthKind::NotStabilized;
    int degree = 0;       // Finite: stable value of h (scheme degree)
    int curve_degree = 0; // Dim1: the constant first difference
    int excess = 0;       // Dim1: h(e) minus the plane-curve polynomial at the last e
};

/// Reads the tail of a Hilbert window: three equal first differences decide
/// between a finite scheme (difference 0) and a dimension-1 locus.
inline Growth classify_growth(const HilbertWindow& H) {
    const auto& v = H.values;
    const int n = static_cast<int>(v.size());
    if (n < 4) return {GrowthKind::NotStabilized, 0, 0, 0};
    const int d1 = v[n - 3] - v[n - 4];
    const int d2 = v[n - 2] - v[n - 3];
    const int d3 = v[n - 1] - v[n - 2];
    if (d1 != d2 || d2 != d3) return {GrowthKind::NotStabilized, 0, 0, 0};
    if (d1 == 0) return {GrowthKind::Finite, v[n - 1], 0, 0};
    if (d1 < 0) return {GrowthKind::NotStabilized, 0, 0, 0};
    const int delta = d1;
    const int e = H.last_degree();
    const int curve_value = delta * e - (delta * (delta - 3)) / 2;
    return {GrowthKind::Dim1, 0, delta, v[n - 1] - curve_value};
}

} // namespace envlab
