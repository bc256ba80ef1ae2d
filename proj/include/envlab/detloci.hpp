#pragma once

#include <string>
#include <vector>

#include "envlab/form_matrix.hpp"
#include "envlab/sparse.hpp"

namespace envlab {

/// Polynomial ring on the entries of a generic (k+1) x k matrix: variable
/// x_{ij} (1-based) sits at index (i-1)k + (j-1).
struct GenericMatrixRing {
    int k;

    explicit GenericMatrixRing(int k_) : k(k_) {
        if (k < 1 || k > 3) throw InputError("generic matrix ring: k must be 1, 2, or 3");
    }

    int nvars() const { return k * (k + 1); }
    int var_index(int i, int j) const { return (i - 1) * k + (j - 1); }

    FormMatrix generic_matrix() const {
        FormMatrix X(nvars(), std::vector<int>(static_cast<std::size_t>(k) + 1, 0),
                     std::vector<int>(static_cast<std::size_t>(k), 1));
        for (int i = 1; i <= k + 1; ++i)
            for (int j = 1; j <= k; ++j)
                X.set(i - 1, j - 1, HomogeneousForm::variable(nvars(), var_index(i, j)));
        return X;
    }
};

/// F_i: determinant of the generic matrix with row i deleted (degree k).
inline HomogeneousForm generic_F(const PrimeField& F, int k, int i) {
    GenericMatrixRing ring(k);
    if (i < 1 || i > k + 1) throw InputError("generic_F: row index out of range");
    return minor_determinant(F, ring.generic_matrix(), i);
}

/// Generators of J_r: all maximal minors of the last k+1-r rows of the
/// generic matrix, ordered by column choice. J_{k+1} is the unit ideal,
/// returned as the single constant form 1.
inline std::vector<HomogeneousForm> jr_generators(const PrimeField& F, int k, int r) {
    GenericMatrixRing ring(k);
    if (r < 1 || r > k + 1) throw InputError("jr_generators: r out of range");
    const int rows = k + 1 - r;
    if (rows == 0) return {HomogeneousForm::one(ring.nvars())};
    std::vector<HomogeneousForm> out;
    std::vector<int> cols(static_cast<std::size_t>(rows));
    for (int c = 0; c < rows; ++c) cols[static_cast<std::size_t>(c)] = c;
    while (true) {
        FormMatrix sub(ring.nvars(), std::vector<int>(static_cast<std::size_t>(rows), 0),
                       std::vector<int>(static_cast<std::size_t>(rows), 1));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < rows; ++j)
                sub.set(i, j,
                        HomogeneousForm::variable(ring.nvars(),
                                                  ring.var_index(r + 1 + i, cols[static_cast<std::size_t>(j)] + 1)));
        std::vector<int> all(static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i) all[static_cast<std::size_t>(i)] = i;
        out.push_back(form_det(F, sub, all));
        // next column combination in lexicographic order
        int pos = rows - 1;
        while (pos >= 0 && cols[static_cast<std::size_t>(pos)] == k - rows + pos) --pos;
        if (pos < 0) break;
        ++cols[static_cast<std::size_t>(pos)];
        for (int q = pos + 1; q < rows; ++q)
            cols[static_cast<std::size_t>(q)] = cols[static_cast<std::size_t>(q - 1)] + 1;
    }
    return out;
}

namespace detail {

inline SparseRow sparse_of(const HomogeneousForm& f) {
    SparseRow row;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        if (f.coeffs()[i] != 0) row.emplace_back(static_cast<int>(i), f.coeffs()[i]);
    return row;
}

/// mu * f as a sparse row in degree deg f + deg mu. Translation preserves
/// the descending-lex order, so columns come out increasing.
inline SparseRow shifted_sparse(const HomogeneousForm& f, const Monomial& mu) {
    const auto& basis = monomial_basis_cached(f.nvars(), f.degree());
    SparseRow row;
    Monomial m(mu.size());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i] == 0) continue;
        for (std::size_t v = 0; v < m.size(); ++v) m[v] = basis[i][v] + mu[v];
        row.emplace_back(static_cast<int>(monomial_rank(m)), f.coeffs()[i]);
    }
    return row;
}

/// Insert every monomial multiple of f landing in degree e.
inline void insert_multiples(SparseEchelon& ech, const HomogeneousForm& f, int e) {
    if (f.degree() > e) return;
    for (const auto& mu : monomial_basis_cached(f.nvars(), e - f.degree()))
        ech.insert(shifted_sparse(f, mu));
}

inline bool multiples_in_span(const SparseEchelon& ech, const HomogeneousForm& f, int e) {
    if (f.degree() > e) return true;
    for (const auto& mu : monomial_basis_cached(f.nvars(), e - f.degree()))
        if (!ech.in_span(shifted_sparse(f, mu))) return false;
    return true;
}

} // namespace detail

struct DetDegreeRow {
    int e = 0;
    int dim_Ir = 0;
    int dim_Ik1 = 0;
    int dim_Jr = 0;
    int dim_sum = 0;
    bool ok = false;
};

struct DecompositionCheck {
    int k = 0;
    int r = 0;
    bool ok = false;                 // the dimension identity holds at every degree
    bool generators_in_Jr = false;   // F_1..F_r lie in J_r, so I_r subset J_r in all degrees
    std::vector<DetDegreeRow> table; // e = 0 .. E
};

/// Degree-by-degree verification that I_r = I_{k+1} /\ J_r: at each e <= E,
/// dim (I_r)_e must equal dim (I_{k+1})_e + dim (J_r)_e - dim (I_{k+1}+J_r)_e.
/// Containment I_r subset I_{k+1} is generator nesting; I_r subset J_r is
/// certified by checking the generators F_1..F_r against (J_r)_k once.
inline DecompositionCheck check_decomposition(const PrimeField& F, int k, int r, int E) {
    GenericMatrixRing ring(k);
    if (r < 1 || r > k + 1) throw InputError("check_decomposition: r out of range");
    if (E < k + 2) throw InputError("check_decomposition: degree cap must be at least k+2");
    const int nv = ring.nvars();
    std::vector<HomogeneousForm> Fs;
    for (int i = 1; i <= k + 1; ++i) Fs.push_back(generic_F(F, k, i));
    const std::vector<HomogeneousForm> Js = jr_generators(F, k, r);

    DecompositionCheck res;
    res.k = k;
    res.r = r;
    res.ok = true;

    {
        SparseEchelon jr_at_k(F, static_cast<int>(monomial_count(nv, k)));
        for (const auto& P : Js) detail::insert_multiples(jr_at_k, P, k);
        res.generators_in_Jr = true;
        for (int i = 0; i < r; ++i)
            if (!jr_at_k.in_span(detail::sparse_of(Fs[static_cast<std::size_t>(i)])))
                res.generators_in_Jr = false;
    }

    for (int e = 0; e <= E; ++e) {
        DetDegreeRow row;
        row.e = e;
        const int cols = static_cast<int>(monomial_count(nv, e));
        SparseEchelon ideal(F, cols);
        for (int i = 0; i < k + 1; ++i) {
            detail::insert_multiples(ideal, Fs[static_cast<std::size_t>(i)], e);
            if (i + 1 == r) row.dim_Ir = ideal.rank();
        }
        row.dim_Ik1 = ideal.rank();
        if (r == k + 1) row.dim_Ir = row.dim_Ik1;

        SparseEchelon with_jr(F, cols);
        for (const auto& P : Js) detail::insert_multiples(with_jr, P, e);
        row.dim_Jr = with_jr.rank();
        for (int i = 0; i < k + 1; ++i) detail::insert_multiples(with_jr, Fs[static_cast<std::size_t>(i)], e);
        row.dim_sum = with_jr.rank();

        row.ok = row.dim_Ir == row.dim_Ik1 + row.dim_Jr - row.dim_sum;
        if (!row.ok) res.ok = false;
        res.table.push_back(row);
    }
    if (!res.generators_in_Jr) res.ok = false;
    return res;
}

/// Cramer-rule membership: every generator P of J_r satisfies
/// P * F_{r+1} in (F_1, ..., F_r).
inline bool check_cramer_membership(const PrimeField& F, int k, int r) {
    GenericMatrixRing ring(k);
    if (r < 1 || r > k) throw InputError("check_cramer_membership: need 1 <= r <= k");
    std::vector<HomogeneousForm> Fs;
    for (int i = 1; i <= r + 1; ++i) Fs.push_back(generic_F(F, k, i));
    const std::vector<HomogeneousForm> Js = jr_generators(F, k, r);
    const int e = (k + 1 - r) + k; // deg P + deg F_{r+1}
    SparseEchelon ideal(F, static_cast<int>(monomial_count(ring.nvars(), e)));
    for (int i = 0; i < r; ++i) detail::insert_multiples(ideal, Fs[static_cast<std::size_t>(i)], e);
    for (const auto& P : Js) {
        const HomogeneousForm prod = form_mul(F, P, Fs[static_cast<std::size_t>(r)]);
        if (!ideal.in_span(detail::sparse_of(prod))) return false;
    }
    return true;
}

/// F_{r+1} itself does not lie in J_r (graded membership at degree k).
inline bool fr1_outside_jr(const PrimeField& F, int k, int r) {
    GenericMatrixRing ring(k);
    if (r < 1 || r > k) throw InputError("fr1_outside_jr: need 1 <= r <= k");
    SparseEchelon jr_at_k(F, static_cast<int>(monomial_count(ring.nvars(), k)));
    for (const auto& P : jr_generators(F, k, r)) detail::insert_multiples(jr_at_k, P, k);
    return !jr_at_k.in_span(detail::sparse_of(generic_F(F, k, r + 1)));
}

/// Point evaluations at the two witness matrices of the codimension proof:
/// A_r (zero rows above an identity block) kills every F_i but not J_r;
/// B = [I_k; 0] kills J_r but not F_{k+1}.
inline bool witness_noninclusions(const PrimeField& F, int k, int r) {
    GenericMatrixRing ring(k);
    if (r < 1 || r > k) throw InputError("witness_noninclusions: need 1 <= r <= k");
    const int nv = ring.nvars();

    bool ok = true;
    if (r >= 2) {
        // A_r: rows 1..r zero, then an identity block of size k+1-r
        std::vector<Scalar> Ar(static_cast<std::size_t>(nv), 0);
        for (int i = 0; i < k + 1 - r; ++i)
            Ar[static_cast<std::size_t>(ring.var_index(r + 1 + i, i + 1))] = 1;
        for (int i = 1; i <= k + 1; ++i)
            if (form_eval(F, generic_F(F, k, i), Ar) != 0) ok = false;
        bool hit = false;
        for (const auto& P : jr_generators(F, k, r))
            if (form_eval(F, P, Ar) == 1) hit = true;
        if (!hit) ok = false;
    }

    std::vector<Scalar> B(static_cast<std::size_t>(nv), 0);
    for (int i = 1; i <= k; ++i) B[static_cast<std::size_t>(ring.var_index(i, i))] = 1;
    for (const auto& P : jr_generators(F, k, r))
        if (form_eval(F, P, B) != 0) ok = false;
    const Scalar fk1 = form_eval(F, generic_F(F, k, k + 1), B);
    if (fk1 != 1 && fk1 != F.neg(1)) ok = false;
    return ok;
}

} // namespace envlab
