#pragma once

#include <string>
#include <vector>

#include "envlab/arrangement.hpp"

namespace envlab {

enum class EnvClass { Plane, Curve, Finite, EqualsZ };

enum class Smoothness { No, Yes, NotTested };

/// Classification of the d-envelope Z_d: the common zero locus of all
/// degree-d forms through the arrangement.
struct EnvelopeReport {
    int d = 0;
    EnvClass cls = EnvClass::Plane;
    int codim = 0;
    bool is_ggd = false;
    // Curve fields
    int curve_degree = 0;
    int excess = 0;
    Smoothness smooth = Smoothness::NotTested;
    // Finite / EqualsZ fields
    int scheme_degree = 0;
    int distinct_count = 0;
    bool reduced = false;
};

struct EnvelopeProfile {
    std::vector<EnvelopeReport> reports; // d = 1 .. max generator degree
    std::vector<int> ggds;               // sorted geometric generating degrees
};

struct Reducedness {
    int distinct_count = 0;
    bool reduced = false;
};

/// Growth classification with the window extended adaptively and the verdict
/// re-confirmed on two extra degrees (guards against accidental plateaus).
inline Growth stable_growth(const PrimeField& F, const IdealPieces& J, int start, int e_max) {
    int e_hi = start + 3;
    while (true) {
        if (e_hi > e_max)
            throw NotStabilized("growth window exceeded cap " + std::to_string(e_max));
        HilbertWindow H;
        H.start_degree = start;
        for (int e = start; e <= e_hi; ++e) H.values.push_back(J.hilbert_value(F, e));
        const Growth g = classify_growth(H);
        if (g.kind == GrowthKind::NotStabilized) {
            ++e_hi;
            continue;
        }
        const int e2 = e_hi + 2;
        if (e2 > e_max) return g;
        for (int e = e_hi + 1; e <= e2; ++e) H.values.push_back(J.hilbert_value(F, e));
        const Growth g2 = classify_growth(H);
        if (g2.kind == g.kind && g2.degree == g.degree && g2.curve_degree == g.curve_degree &&
            g2.excess == g.excess)
            return g2;
        e_hi = e2;
    }
}

/// Smoothness of the plane curve F = 0: the three partials have no common
/// projective zero. Exact: the partial-derivative ideal is checked at one
/// degree past its worst-case regularity (3 deg - 5 for a system of
/// parameters of degree deg-1 in three variables).
inline bool curve_smoothness(const PrimeField& F, const HomogeneousForm& f) {
    if (f.degree() < 1) throw MathError("curve_smoothness: need positive degree");
    const auto parts = form_partials(F, f);
    std::vector<HomogeneousForm> gens;
    for (const auto& g : parts)
        if (!g.is_zero()) gens.push_back(g);
    if (gens.empty()) throw MathError("curve_smoothness: all partials vanish (characteristic too small)");
    GeneratedPieces J(F, gens);
    const int e_stop = std::max(3 * f.degree() - 5, f.degree());
    for (int e = std::max(f.degree() - 1, 0); e <= e_stop; ++e)
        if (J.hilbert_value(F, e) == 0) return true;
    return false;
}

/// Distinct-point count and reducedness of a finite scheme of degree m given
/// by ideal pieces: spectra of multiplication operators u/l on the degree-e
/// coordinate space, confirmed with a second random draw.
inline Reducedness finite_reducedness(const PrimeField& F, const IdealPieces& J, int m, Rng& rng,
                                      int e_max) {
    if (m < 1) throw MathError("finite_reducedness: need scheme degree >= 1");
    const Stabilization st = stabilize(F, J, e_max);
    if (st.value != m)
        throw MathError("finite_reducedness: stabilized value " + std::to_string(st.value) +
                        " differs from expected degree " + std::to_string(m));
    const int e = st.degree;
    const GradedPiece& Pe = J.piece(e);
    const GradedPiece& Pe1 = J.piece(e + 1);
    auto nonpivots = [](const GradedPiece& P) {
        std::vector<int> q;
        std::vector<bool> is_pivot(static_cast<std::size_t>(P.ech.cols), false);
        for (int c : P.ech.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
        for (int c = 0; c < P.ech.cols; ++c)
            if (!is_pivot[static_cast<std::size_t>(c)]) q.push_back(c);
        return q;
    };
    const std::vector<int> q0 = nonpivots(Pe), q1 = nonpivots(Pe1);
    if (static_cast<int>(q0.size()) != m || static_cast<int>(q1.size()) != m)
        throw MathError("finite_reducedness: quotient dimensions off plateau");
    const auto& mons = monomial_basis_cached(3, e);

    // Matrix of multiplication by the linear form l, (S/J)_e -> (S/J)_{e+1}.
    auto mult_matrix = [&](const std::array<Scalar, 3>& l) {
        DenseMatrix M(static_cast<std::size_t>(m), std::vector<Scalar>(static_cast<std::size_t>(m), 0));
        for (int j = 0; j < m; ++j) {
            std::vector<Scalar> w(static_cast<std::size_t>(monomial_count(3, e + 1)), 0);
            for (int v = 0; v < 3; ++v) {
                if (l[static_cast<std::size_t>(v)] == 0) continue;
                Monomial mu = mons[static_cast<std::size_t>(q0[static_cast<std::size_t>(j)])];
                ++mu[static_cast<std::size_t>(v)];
                const auto r = static_cast<std::size_t>(monomial_rank(mu));
                w[r] = F.add(w[r], l[static_cast<std::size_t>(v)]);
            }
            const auto nf = normal_form(F, Pe1.ech, w);
            for (int i = 0; i < m; ++i)
                M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    nf[static_cast<std::size_t>(q1[static_cast<std::size_t>(i)])];
        }
        return M;
    };

    auto draw = [&]() -> Reducedness {
        for (int attempt = 0; attempt < 5; ++attempt) {
            const std::array<Scalar, 3> l{rng.scalar(F), rng.scalar(F), rng.scalar(F)};
            if (l[0] == 0 && l[1] == 0 && l[2] == 0) continue;
            const auto Ml = mult_matrix(l);
            const auto inv = mat_inverse(F, Ml);
            if (!inv) continue;
            std::array<Scalar, 3> u{rng.scalar(F), rng.scalar(F), rng.scalar(F)};
            if (u[0] == 0 && u[1] == 0 && u[2] == 0) u[0] = 1;
            const auto M = mat_mul(F, mult_matrix(u), *inv);
            const UniPoly chi = char_poly(F, M);
            const int dc = squarefree_part_degree(F, chi);
            return {dc, dc == m};
        }
        throw MathError("finite_reducedness: no invertible linear form in 5 draws");
    };

    // Return the first verdict confirmed by two independent draws.  A third
    // draw breaks the occasional tie caused by eigenvalue collisions over F_p.
    std::vector<Reducedness> seen{draw()};
    for (int i = 0; i < 2; ++i) {
        const Reducedness r = draw();
        for (const Reducedness& s : seen)
            if (s.distinct_count == r.distinct_count && s.reduced == r.reduced) return r;
        seen.push_back(r);
    }
    throw DegenerateSample("finite_reducedness: independent draws disagree");
}

/// Are the envelopes Z_{d1} and Z_{d2} equal? Decided on stabilized Hilbert
/// data of the two generated ideals; the containment Z_{d2} subset Z_{d1} is
/// automatic, so matching growth data implies equality.
inline bool envelope_equals_pieces(const PrimeField& F, const IdealPieces& I, int d1, int d2,
                                   int e_max) {
    if (d1 >= d2) throw MathError("envelope_equals: need d1 < d2");
    const GradedPiece& V1 = I.piece(d1);
    const GradedPiece& V2 = I.piece(d2);
    if (V1.dim() == 0 || V2.dim() == 0) return V1.dim() == V2.dim();
    GeneratedPieces J1(F, std::vector<GradedPiece>{V1});
    GeneratedPieces J2(F, std::vector<GradedPiece>{V2});
    const Growth g1 = stable_growth(F, J1, d1, e_max);
    const Growth g2 = stable_growth(F, J2, d2, e_max);
    if (g1.kind != g2.kind) return false;
    if (g1.kind == GrowthKind::Finite) return g1.degree == g2.degree;
    return g1.curve_degree == g2.curve_degree && g1.excess == g2.excess;
}

/// Classification of Z_d for a provider of saturated ideal pieces whose
/// Hilbert function stabilizes at n. Does not fill is_ggd.
inline EnvelopeReport classify_core(const PrimeField& F, const IdealPieces& I, int n, int d,
                                    Rng& rng, int e_max) {
    if (d < 1) throw MathError("classify_envelope: need d >= 1");
    EnvelopeReport rep;
    rep.d = d;
    const GradedPiece& V = I.piece(d);
    if (V.dim() == 0) {
        rep.cls = EnvClass::Plane;
        rep.codim = 0;
        return rep;
    }
    GeneratedPieces J(F, std::vector<GradedPiece>{V});
    const Growth g = stable_growth(F, J, d, e_max);
    if (g.kind == GrowthKind::Dim1) {
        rep.cls = EnvClass::Curve;
        rep.codim = 1;
        rep.curve_degree = g.curve_degree;
        rep.excess = g.excess;
        rep.smooth = Smoothness::NotTested;
        if (V.dim() == 1)
            rep.smooth = curve_smoothness(F, V.forms(F)[0]) ? Smoothness::Yes : Smoothness::No;
        return rep;
    }
    const int m = g.degree;
    if (m < n) throw MathError("envelope scheme degree fell below the point count");
    rep.codim = 2;
    if (m == n) {
        rep.cls = EnvClass::EqualsZ;
        rep.scheme_degree = n;
        rep.distinct_count = n;
        rep.reduced = true;
        return rep;
    }
    rep.cls = EnvClass::Finite;
    rep.scheme_degree = m;
    const Reducedness red = finite_reducedness(F, J, m, rng, e_max);
    rep.distinct_count = red.distinct_count;
    rep.reduced = red.reduced;
    return rep;
}

/// Geometric generating degrees: candidate degrees are the generator degrees
/// (every ggd is one of them, and the least generator degree always
/// qualifies); each remaining candidate d is kept iff Z_d differs from
/// Z_{d-1}.
inline std::vector<int> ggds_from_pieces(const PrimeField& F, const IdealPieces& I,
                                         const std::vector<int>& gen_degrees, int e_max) {
    if (gen_degrees.empty()) throw MathError("ggds: no generator degrees");
    std::vector<int> uniq = gen_degrees;
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    const int d1 = uniq.front();
    if (I.piece(d1 - 1).dim() != 0 || I.piece(d1).dim() == 0)
        throw MathError("ggds: least generator degree is not the first nonzero piece");
    std::vector<int> out{d1};
    for (std::size_t i = 1; i < uniq.size(); ++i)
        if (!envelope_equals_pieces(F, I, uniq[i] - 1, uniq[i], e_max)) out.push_back(uniq[i]);
    return out;
}

inline int envelope_window_cap(int max_gen_degree, int n) { return 3 * max_gen_degree + n + 6; }

inline EnvelopeProfile profile_from_pieces(const PrimeField& F, const IdealPieces& I, int n,
                                           const std::vector<int>& gen_degrees, Rng& rng) {
    const int d_stop = gen_degrees.back();
    const int e_max = envelope_window_cap(d_stop, n);
    EnvelopeProfile prof;
    prof.ggds = ggds_from_pieces(F, I, gen_degrees, e_max);
    for (int d = 1; d <= d_stop; ++d) {
        Rng sub = rng.fork(static_cast<std::uint64_t>(d));
        EnvelopeReport rep = classify_core(F, I, n, d, sub, e_max);
        rep.is_ggd = std::binary_search(prof.ggds.begin(), prof.ggds.end(), d);
        prof.reports.push_back(rep);
    }
    return prof;
}

// ---- Arrangement-level wrappers ----

inline EnvelopeReport classify_envelope(const PrimeField& F, const Arrangement& Z, int d,
                                        Rng& rng) {
    ArrangementPieces I(F, Z);
    const int e_max = envelope_window_cap(std::max(d, Z.n()), Z.n());
    EnvelopeReport rep = classify_core(F, I, Z.n(), d, rng, e_max);
    rep.is_ggd = !envelope_equals_pieces(F, I, d - 1, d, e_max);
    return rep;
}

inline bool envelope_equals(const PrimeField& F, const Arrangement& Z, int d1, int d2) {
    ArrangementPieces I(F, Z);
    return envelope_equals_pieces(F, I, d1, d2, envelope_window_cap(std::max(d2, Z.n()), Z.n()));
}

inline std::vector<int> geometric_generating_degrees(const PrimeField& F, const Arrangement& Z) {
    ArrangementPieces I(F, Z);
    const auto gens = generator_degrees_from_pieces(F, I, Z.n() + 3);
    return ggds_from_pieces(F, I, gens, envelope_window_cap(gens.back(), Z.n()));
}

inline EnvelopeProfile envelope_profile(const PrimeField& F, const Arrangement& Z, Rng& rng) {
    ArrangementPieces I(F, Z);
    const auto gens = generator_degrees_from_pieces(F, I, Z.n() + 3);
    return profile_from_pieces(F, I, Z.n(), gens, rng);
}

} // namespace envlab
