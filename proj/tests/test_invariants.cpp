#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "envlab/hilbertburch.hpp"

using namespace envlab;

namespace {
const PrimeField F(kDefaultPrime);
}

TEST_CASE("resolution identities hold for random arrangements") {
    Rng rng(81);
    for (int n = 2; n <= 20; ++n)
        for (int rep = 0; rep < 2; ++rep) {
            const Arrangement Z = sample_general_points(F, n, rng);
            const ResolutionData R = resolution_data(F, Z);
            REQUIRE(R.a.size() == R.b.size() + 1);
            long sa = 0, sb = 0;
            for (int ai : R.a) sa += ai;
            for (int bj : R.b) sb += bj;
            REQUIRE(sa == sb);
            REQUIRE(points_count(R) == n);
            REQUIRE(std::is_sorted(R.a.begin(), R.a.end()));
            REQUIRE(std::is_sorted(R.b.begin(), R.b.end()));
        }
}

TEST_CASE("generating degrees always contain the first active degree") {
    Rng rng(82);
    for (int n : {2, 3, 5, 7, 8, 10, 12, 14, 16, 18, 20}) {
        const Arrangement Z = sample_general_points(F, n, rng);
        ArrangementPieces I(F, Z);
        const std::vector<int> a = generator_degrees_from_pieces(F, I, n + 3);
        const std::vector<int> g = ggds_from_pieces(F, I, a, envelope_window_cap(a.back(), n));
        REQUIRE_FALSE(g.empty());
        REQUIRE(std::is_sorted(g.begin(), g.end()));
        REQUIRE(std::adjacent_find(g.begin(), g.end()) == g.end()); // strictly increasing
        REQUIRE(g.front() == a.front());
        for (int d : g) REQUIRE(std::find(a.begin(), a.end(), d) != a.end());
    }
}

TEST_CASE("ideal pieces of arrangements really form an ideal") {
    Rng rng(83);
    for (int n : {3, 6, 11, 15}) {
        const Arrangement Z = sample_general_points(F, n, rng);
        ArrangementPieces I(F, Z);
        for (int d = 1; d <= 6; ++d)
            REQUIRE(piece_contains(F, I.piece(d + 1), piece_product(F, I.piece(d), d + 1)));
    }
}

TEST_CASE("envelope chains are monotone and terminate in the arrangement") {
    Rng rng(84);
    for (int n : {4, 6, 8, 9, 11, 13}) {
        const Arrangement Z = sample_general_points(F, n, rng);
        ArrangementPieces I(F, Z);
        const std::vector<int> a = generator_degrees_from_pieces(F, I, n + 3);
        const int cap = envelope_window_cap(a.back(), n);
        int prev_codim = 0;
        int prev_finite = 0;
        bool was_equal = false;
        for (int d = 1; d <= a.back(); ++d) {
            Rng sub = rng.fork(static_cast<std::uint64_t>(1000 + d));
            const EnvelopeReport rep = classify_core(F, I, n, d, sub, cap);
            REQUIRE(rep.codim >= prev_codim); // the locus can only shrink
            prev_codim = rep.codim;
            if (rep.codim == 2) {
                REQUIRE(rep.scheme_degree >= n);
                if (prev_finite > 0) REQUIRE(rep.scheme_degree <= prev_finite);
                prev_finite = rep.scheme_degree;
            }
            if (was_equal) REQUIRE(rep.cls == EnvClass::EqualsZ);
            if (rep.cls == EnvClass::EqualsZ) was_equal = true;
        }
        // one degree past Hilbert stabilization the envelope is exactly Z
        const Stabilization st = stabilize(F, I, n + 3);
        Rng sub = rng.fork(2000);
        const EnvelopeReport tail = classify_core(F, I, n, st.degree + 1, sub, cap);
        REQUIRE(tail.cls == EnvClass::EqualsZ);
    }
}

TEST_CASE("adding a generator can only lower hilbert values") {
    Rng rng(85);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<HomogeneousForm> gens;
        const int count = 1 + static_cast<int>(rng.below(3));
        for (int i = 0; i < count; ++i)
            gens.push_back(HomogeneousForm::random(F, rng, 3, 2 + static_cast<int>(rng.below(2))));
        GeneratedPieces J(F, gens);
        gens.push_back(HomogeneousForm::random(F, rng, 3, 2 + static_cast<int>(rng.below(2))));
        GeneratedPieces K(F, gens);
        for (int e = 0; e <= 7; ++e)
            REQUIRE(K.hilbert_value(F, e) <= J.hilbert_value(F, e));
    }
}

TEST_CASE("sampled matrices satisfy the signed-minor column relations") {
    const std::vector<ResolutionData> shapes = {
        {{2, 2}, {4}},       {{2, 3}, {5}},       {{2, 2, 2}, {3, 3}},
        {{3, 3, 4}, {5, 5}}, {{3, 4, 5}, {6, 6}}, {{3, 3, 3, 3}, {4, 4, 4}},
    };
    Rng rng(86);
    int checked = 0;
    for (const ResolutionData& R : shapes)
        for (int rep = 0; rep < 5; ++rep) {
            const FormMatrix A = sample_hb_matrix(F, R, rng);
            std::vector<HomogeneousForm> mins;
            try {
                mins = minors_of(F, A);
            } catch (const DegenerateSample&) {
                continue; // a vanishing minor aborts this draw, not the property
            }
            for (int j = 0; j < A.cols(); ++j) {
                HomogeneousForm acc =
                    HomogeneousForm::zero(3, R.b[static_cast<std::size_t>(j)]);
                for (int i = 0; i < A.rows(); ++i) {
                    const HomogeneousForm t =
                        form_mul(F, mins[static_cast<std::size_t>(i)], A.at(i, j));
                    acc = (i % 2 == 0) ? form_add(F, acc, t) : form_sub(F, acc, t);
                }
                REQUIRE(acc.is_zero());
                ++checked;
            }
        }
    REQUIRE(checked >= 30);
}

TEST_CASE("reducedness verdicts do not depend on the random stream") {
    const auto q1 = form_sub(F, HomogeneousForm::term(3, {2, 0, 0}, 1),
                             HomogeneousForm::term(3, {0, 0, 2}, 1));
    const auto q2 = form_sub(F, HomogeneousForm::term(3, {0, 2, 0}, 1),
                             HomogeneousForm::term(3, {0, 0, 2}, 1));
    const GeneratedPieces ci(F, std::vector<HomogeneousForm>{q1, q2});
    for (std::uint64_t s = 0; s < 10; ++s) {
        Rng rng = Rng::substream(87, s);
        const Reducedness r = finite_reducedness(F, ci, 4, rng, 12);
        REQUIRE(r.distinct_count == 4);
        REQUIRE(r.reduced);
    }
}
