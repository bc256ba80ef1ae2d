#pragma once

#include <algorithm>
#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "envlab/graded.hpp"
#include "envlab/resolution_data.hpp"

namespace envlab {

/// A point of P^2(F_p), normalized so the last nonzero coordinate is 1.
struct PointP2 {
    std::array<Scalar, 3> c{0, 0, 0};

    bool operator==(const PointP2& o) const { return c == o.c; }
};

inline PointP2 make_point(const PrimeField& F, Scalar x, Scalar y, Scalar z) {
    PointP2 p{{F.reduce(x), F.reduce(y), F.reduce(z)}};
    int last = -1;
    for (int i = 2; i >= 0; --i)
        if (p.c[i] != 0) {
            last = i;
            break;
        }
    if (last < 0) throw MathError("projective point: all coordinates zero");
    const Scalar inv = F.inv(p.c[last]);
    for (auto& v : p.c) v = F.mul(v, inv);
    return p;
}

/// A finite set of distinct points in P^2(F_p). Order is preserved but
/// carries no meaning.
struct Arrangement {
    std::vector<PointP2> points;

    int n() const { return static_cast<int>(points.size()); }

    void validate() const {
        if (points.empty()) throw InputError("arrangement: no points");
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (points[i] == points[j]) throw InputError("arrangement: duplicate point");
    }
};

/// n x C(d+2,2) matrix of monomial values: row per point, column per
/// degree-d monomial in the canonical order.
inline DenseMatrix evaluation_matrix(const PrimeField& F, const Arrangement& Z, int d) {
    const auto& mons = monomial_basis_cached(3, d);
    DenseMatrix m(Z.points.size(), std::vector<Scalar>(mons.size(), 0));
    for (std::size_t i = 0; i < Z.points.size(); ++i) {
        // power tables per coordinate
        std::array<std::vector<Scalar>, 3> pw;
        for (int v = 0; v < 3; ++v) {
            pw[v].assign(static_cast<std::size_t>(d) + 1, 1);
            for (int e = 1; e <= d; ++e) pw[v][e] = F.mul(pw[v][e - 1], Z.points[i].c[v]);
        }
        for (std::size_t j = 0; j < mons.size(); ++j)
            m[i][j] = F.mul(F.mul(pw[0][mons[j][0]], pw[1][mons[j][1]]), pw[2][mons[j][2]]);
    }
    return m;
}

/// I_d: all degree-d forms vanishing on Z, i.e. the kernel of the
/// evaluation matrix.
inline GradedPiece ideal_piece(const PrimeField& F, const Arrangement& Z, int d) {
    GradedPiece p;
    p.nvars = 3;
    p.degree = d;
    const int cols = monomial_count(3, d);
    DenseMatrix basis = kernel_basis(F, evaluation_matrix(F, Z, d), cols);
    p.ech = rref(F, std::move(basis), cols);
    return p;
}

/// h_Z(e) = rank of the evaluation matrix; grows to n and stays there.
inline int hilbert_function(const PrimeField& F, const Arrangement& Z, int e) {
    return rank_of(F, evaluation_matrix(F, Z, e), monomial_count(3, e));
}

/// Saturated ideal pieces of an arrangement, cached by degree.
class ArrangementPieces final : public IdealPieces {
public:
    ArrangementPieces(const PrimeField& F, Arrangement Z) : F_(F), Z_(std::move(Z)) {
        Z_.validate();
    }

    int nvars() const override { return 3; }
    const Arrangement& arrangement() const { return Z_; }

protected:
    GradedPiece compute(int degree) const override { return ideal_piece(F_, Z_, degree); }

private:
    const PrimeField& F_;
    Arrangement Z_;
};

inline Arrangement sample_general_points(const PrimeField& F, int n, Rng& rng) {
    if (n < 1) throw InputError("sample_general_points: need n >= 1");
    Arrangement Z;
    while (Z.n() < n) {
        Scalar x = rng.scalar(F), y = rng.scalar(F), z = rng.scalar(F);
        if (x == 0 && y == 0 && z == 0) continue;
        const PointP2 p = make_point(F, x, y, z);
        bool dup = false;
        for (const auto& q : Z.points)
            if (q == p) {
                dup = true;
                break;
            }
        if (!dup) Z.points.push_back(p);
    }
    return Z;
}

// ---- Hilbert-function stabilization and resolution data ----

struct Stabilization {
    int degree = 0; // first e with h(e) = h(e+1) = h(e+2)
    int value = 0;  // the stable value (= point count for arrangements)
};

/// First degree where the Hilbert function of S/J sits on a length-3
/// plateau. For the saturated ideal of a point arrangement this is the
/// genuine stabilization (h is strictly increasing before reaching n).
inline Stabilization stabilize(const PrimeField& F, const IdealPieces& J, int e_max) {
    for (int e = 0; e <= e_max; ++e) {
        const int h0 = J.hilbert_value(F, e);
        if (h0 == J.hilbert_value(F, e + 1) && h0 == J.hilbert_value(F, e + 2))
            return {e, h0};
    }
    throw NotStabilized("hilbert function shows no plateau through degree " + std::to_string(e_max));
}

/// Minimal-generator count in each degree: mu_d = dim I_d - dim S_1*I_{d-1},
/// collected until three consecutive degrees past stabilization add nothing.
inline std::vector<int> generator_degrees_from_pieces(const PrimeField& F, const IdealPieces& I,
                                                      int e_max) {
    const Stabilization st = stabilize(F, I, e_max);
    std::vector<int> gens;
    int zero_run = 0;
    for (int d = 1; d <= st.degree + 6; ++d) {
        const int dim_d = I.piece(d).dim();
        const int from_below = piece_product(F, I.piece(d - 1), d).dim();
        const int mu = dim_d - from_below;
        if (mu < 0) throw MathError("generator count went negative: pieces are not an ideal");
        for (int c = 0; c < mu; ++c) gens.push_back(d);
        zero_run = (mu == 0) ? zero_run + 1 : 0;
        if (d > st.degree && zero_run >= 3) return gens;
    }
    throw NotStabilized("generator degrees did not settle by degree " +
                        std::to_string(st.degree + 6));
}

/// Syzygy degrees from the Hilbert-series numerator: with
/// c_d = dim I_d - 3 dim I_{d-1} + 3 dim I_{d-2} - dim I_{d-3}
/// one has #{b_j = d} = #{a_i = d} - c_d.
inline std::vector<int> syzygy_degrees_from_pieces(const PrimeField& F, const IdealPieces& I,
                                                   const std::vector<int>& a, int e_max) {
    const Stabilization st = stabilize(F, I, e_max);
    const int d_hi = st.degree + 3;
    auto dim_at = [&](int e) { return e < 0 ? 0 : I.piece(e).dim(); };
    std::vector<int> b;
    long sum_a = 0, sum_b = 0;
    for (int ai : a) sum_a += ai;
    for (int d = 1; d <= d_hi; ++d) {
        const int c_d = dim_at(d) - 3 * dim_at(d - 1) + 3 * dim_at(d - 2) - dim_at(d - 3);
        const int count_a = static_cast<int>(std::count(a.begin(), a.end(), d));
        const int count_b = count_a - c_d;
        if (count_b < 0) throw MathError("syzygy count went negative at degree " + std::to_string(d));
        for (int c = 0; c < count_b; ++c) {
            b.push_back(d);
            sum_b += d;
        }
    }
    if (b.size() + 1 != a.size())
        throw MathError("syzygy accounting: expected one fewer syzygy than generators");
    if (sum_a != sum_b) throw MathError("syzygy accounting: degree sums differ");
    return b;
}

/// Full resolution data of an ideal presented by its graded pieces; checks
/// the point-count identity n = (sum b^2 - sum a^2)/2 against the Hilbert
/// stabilization value.
inline ResolutionData resolution_data_from_pieces(const PrimeField& F, const IdealPieces& I,
                                                  int e_max) {
    ResolutionData R;
    R.a = generator_degrees_from_pieces(F, I, e_max);
    R.b = syzygy_degrees_from_pieces(F, I, R.a, e_max);
    R.validate();
    const Stabilization st = stabilize(F, I, e_max);
    if (points_count(R) != st.value)
        throw MathError("resolution data violates the point-count identity");
    return R;
}

inline std::vector<int> generator_degrees(const PrimeField& F, const Arrangement& Z) {
    return generator_degrees_from_pieces(F, ArrangementPieces(F, Z), Z.n() + 3);
}

inline std::vector<int> syzygy_degrees(const PrimeField& F, const Arrangement& Z,
                                       const std::vector<int>& a) {
    return syzygy_degrees_from_pieces(F, ArrangementPieces(F, Z), a, Z.n() + 3);
}

inline ResolutionData resolution_data(const PrimeField& F, const Arrangement& Z) {
    return resolution_data_from_pieces(F, ArrangementPieces(F, Z), Z.n() + 3);
}

// ---- Point-file format: one point per line, three integers, '#' comments ----

inline Arrangement parse_points(const PrimeField& F, const std::string& text) {
    Arrangement Z;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long x, y, z;
        if (!(ls >> x)) continue; // blank or comment-only line
        if (!(ls >> y >> z))
            throw InputError("point file line " + std::to_string(lineno) +
                             ": expected three integers");
        long long extra;
        if (ls >> extra)
            throw InputError("point file line " + std::to_string(lineno) +
                             ": expected exactly three integers");
        try {
            Z.points.push_back(make_point(F, F.reduce(x), F.reduce(y), F.reduce(z)));
        } catch (const MathError& e) {
            throw InputError("point file line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    Z.validate();
    return Z;
}

inline std::string write_points(const Arrangement& Z) {
    std::ostringstream os;
    for (const auto& p : Z.points) os << p.c[0] << ' ' << p.c[1] << ' ' << p.c[2] << '\n';
    return os.str();
}

} // namespace envlab
