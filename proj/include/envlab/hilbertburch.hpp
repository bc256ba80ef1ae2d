#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "envlab/envelope.hpp"
#include "envlab/form_matrix.hpp"
#include "envlab/resolution_data.hpp"

namespace envlab {

/// The unique (d, r) with C(d+1,2) <= n = C(d+2,2) - r and r > 0.
inline std::pair<int, int> d_r_for_n(int n) {
    if (n < 1) throw InputError("d_r_for_n: need n >= 1");
    int d = 1;
    while (!(binomial(d + 1, 2) <= n && n <= binomial(d + 2, 2) - 1)) ++d;
    return {d, binomial(d + 2, 2) - n};
}

/// Resolution data of n general points: r generators in degree d and the
/// rest of the generator/syzygy degrees split between d+1 and d+2 according
/// to which side of d+2 the quantity 2r falls.
inline ResolutionData generic_resolution_data(int n) {
    if (n < 2) throw InputError("generic_resolution_data: need n >= 2");
    const auto [d, r] = d_r_for_n(n);
    ResolutionData R;
    const int k = 2 * r >= d + 2 ? r - 1 : d + 1 - r;
    if (2 * r >= d + 2) {
        // k = r - 1; all generators in degree d
        R.a.assign(static_cast<std::size_t>(r), d);
        R.b.assign(static_cast<std::size_t>(2 * r - d - 2), d + 1);
        R.b.insert(R.b.end(), static_cast<std::size_t>(d + 1 - r), d + 2);
    } else {
        // k = d + 1 - r; generators in degrees d and d+1, syzygies in d+2
        R.a.assign(static_cast<std::size_t>(r), d);
        R.a.insert(R.a.end(), static_cast<std::size_t>(k + 1 - r), d + 1);
        R.b.assign(static_cast<std::size_t>(k), d + 2);
    }
    R.validate();
    if (points_count(R) != n)
        throw MathError("generic resolution data fails the point-count identity at n = " +
                        std::to_string(n));
    return R;
}

/// Random matrix with entry (i,j) a uniformly random form of degree
/// b_j - a_i; the sampling space for the genericity theorem.
inline FormMatrix sample_hb_matrix(const PrimeField& F, const ResolutionData& R, Rng& rng) {
    R.validate();
    if (!is_positive(R))
        throw InputError("sample_hb_matrix: resolution data must be positive (max a < min b)");
    FormMatrix A(3, R.a, R.b);
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            A.set(i, j, HomogeneousForm::random(F, rng, 3, A.entry_degree(i, j)));
    return A;
}

/// The k+1 maximal minors: F_i = det of A with row i deleted; deg F_i = a_i.
inline std::vector<HomogeneousForm> minors_of(const PrimeField& F, const FormMatrix& A) {
    std::vector<HomogeneousForm> out;
    for (int i = 1; i <= A.rows(); ++i) {
        HomogeneousForm Fi = minor_determinant(F, A, i);
        if (Fi.is_zero())
            throw DegenerateSample("minor " + std::to_string(i) + " vanishes identically");
        out.push_back(std::move(Fi));
    }
    return out;
}

enum class ExpectedClass { Plane, Curve, Finite, EqualsZ };

/// Prediction of the envelope chain from resolution data alone, via
/// r(d) = #{a_i <= d}: 0 -> the whole plane, 1 -> a smooth curve,
/// 2 -> a finite scheme (all of Z exactly when k = 1), >= 3 -> Z itself.
struct ExpectedProfile {
    std::map<int, ExpectedClass> classes; // d = 0 .. max a
    int finite_degree = 0;                // Bezout prediction a_1 * a_2 for the Finite rows
    std::vector<int> ggds;                // {a_1, a_2} for k = 1, else {a_1, a_2, a_3}, deduplicated
};

inline ExpectedProfile expected_profile(const ResolutionData& R) {
    R.validate();
    if (!is_positive(R)) throw InputError("expected_profile: resolution data must be positive");
    ExpectedProfile P;
    const int k = R.k();
    P.finite_degree = R.a[0] * R.a[1];
    for (int d = 0; d <= R.a.back(); ++d) {
        const int r = r_of(R, d);
        ExpectedClass c;
        if (r == 0)
            c = ExpectedClass::Plane;
        else if (r == 1)
            c = ExpectedClass::Curve;
        else if (r == 2)
            c = k == 1 ? ExpectedClass::EqualsZ : ExpectedClass::Finite;
        else
            c = ExpectedClass::EqualsZ;
        P.classes[d] = c;
    }
    const std::size_t count = k == 1 ? 2 : 3;
    for (std::size_t i = 0; i < count && i < R.a.size(); ++i)
        if (P.ggds.empty() || P.ggds.back() != R.a[i]) P.ggds.push_back(R.a[i]);
    return P;
}

/// Codimension (m - c)(n - c) of the locus of m x n matrices of rank <= c.
inline int expected_codim_rank_locus(int m, int n, int c) {
    if (c < 0 || c > std::min(m, n))
        throw InputError("expected_codim_rank_locus: rank bound out of range");
    return (m - c) * (n - c);
}

/// One sampled-matrix verification of the genericity theorem.
struct HbTrial {
    bool ok_points = false;     // Hilbert function stabilizes at points_count(R)
    bool ok_resolution = false; // minors regenerate resolution data R
    bool ok_reduced = false;    // Z(A) is reduced with n distinct points
    bool ok_profile = false;    // envelope classes and ggds match the prediction
    bool ok_bezout = false;     // finite envelopes have degree a_1 * a_2
    int degenerate_resamples = 0;
    std::vector<EnvelopeReport> profile; // observed classification, d = 1 .. max a

    bool passed() const { return ok_points && ok_resolution && ok_reduced && ok_profile && ok_bezout; }
};

namespace detail {

inline HbTrial hb_attempt(const PrimeField& F, const ResolutionData& R, Rng& rng,
                          bool is_resample) {
    HbTrial t;
    const FormMatrix A = sample_hb_matrix(F, R, rng);
    const std::vector<HomogeneousForm> minors = minors_of(F, A);
    GeneratedPieces J(F, minors);
    const int n = points_count(R);
    const long sum_b = std::accumulate(R.b.begin(), R.b.end(), 0L);
    const int e_max = static_cast<int>(sum_b) + 4;

    const Stabilization st = stabilize(F, J, e_max);
    t.ok_points = st.value == n;
    if (!t.ok_points) return t;

    t.ok_resolution = resolution_data_from_pieces(F, J, e_max) == R;

    const Reducedness red = finite_reducedness(F, J, n, rng, e_max);
    t.ok_reduced = red.reduced && red.distinct_count == n;
    if (!t.ok_reduced && !is_resample)
        throw DegenerateSample("sampled arrangement tests as non-reduced");

    const ExpectedProfile exp = expected_profile(R);
    const int env_cap = envelope_window_cap(R.a.back(), n);
    t.ok_profile = true;
    t.ok_bezout = true;
    for (int d = 1; d <= R.a.back(); ++d) {
        Rng sub = rng.fork(static_cast<std::uint64_t>(100 + d));
        const EnvelopeReport rep = classify_core(F, J, n, d, sub, env_cap);
        t.profile.push_back(rep);
        switch (exp.classes.at(d)) {
        case ExpectedClass::Plane:
            if (rep.cls != EnvClass::Plane) t.ok_profile = false;
            break;
        case ExpectedClass::Curve:
            if (rep.cls != EnvClass::Curve || rep.excess != 0 || rep.curve_degree != R.a[0] ||
                rep.smooth == Smoothness::No)
                t.ok_profile = false;
            break;
        case ExpectedClass::Finite:
            if (rep.cls != EnvClass::Finite || !rep.reduced) t.ok_profile = false;
            if (rep.cls == EnvClass::Finite && rep.scheme_degree != exp.finite_degree)
                t.ok_bezout = false;
            break;
        case ExpectedClass::EqualsZ:
            if (rep.cls != EnvClass::EqualsZ) t.ok_profile = false;
            break;
        }
    }
    const std::vector<int> ggds = ggds_from_pieces(F, J, R.a, env_cap);
    if (ggds != exp.ggds) t.ok_profile = false;
    for (EnvelopeReport& rep : t.profile)
        rep.is_ggd = std::binary_search(ggds.begin(), ggds.end(), rep.d);
    return t;
}

} // namespace detail

/// Samples A in HB(R), regenerates the arrangement data from its minors, and
/// checks every claim of the genericity theorem. A degenerate draw (zero
/// minor, non-reduced verdict, or disagreeing reducedness draws) is resampled
/// once and counted; failing twice is an honest failed trial.
inline HbTrial verify_hb_sample(const PrimeField& F, const ResolutionData& R, Rng& rng) {
    Rng first = rng.fork(1);
    try {
        return detail::hb_attempt(F, R, first, false);
    } catch (const DegenerateSample&) {
        Rng second = rng.fork(2);
        HbTrial t;
        try {
            t = detail::hb_attempt(F, R, second, true);
        } catch (const DegenerateSample&) {
            // twice-degenerate: report as a failed trial with all checks false
        }
        t.degenerate_resamples = 1;
        return t;
    }
}

} // namespace envlab
