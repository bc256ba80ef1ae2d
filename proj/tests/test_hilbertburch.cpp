#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "envlab/hilbertburch.hpp"

using namespace envlab;

namespace {
const PrimeField F(kDefaultPrime);
}

TEST_CASE("the (d, r) bracket of n") {
    REQUIRE(d_r_for_n(1) == std::pair<int, int>{1, 2});
    REQUIRE(d_r_for_n(2) == std::pair<int, int>{1, 1});
    REQUIRE(d_r_for_n(4) == std::pair<int, int>{2, 2});
    REQUIRE(d_r_for_n(8) == std::pair<int, int>{3, 2});
    REQUIRE(d_r_for_n(13) == std::pair<int, int>{4, 2});
    REQUIRE(d_r_for_n(18) == std::pair<int, int>{5, 3});
    REQUIRE_THROWS_AS(d_r_for_n(0), InputError);
}

TEST_CASE("resolution data of general points, spot values and identities") {
    REQUIRE((generic_resolution_data(2) == ResolutionData{{1, 2}, {3}}));
    REQUIRE((generic_resolution_data(4) == ResolutionData{{2, 2}, {4}}));
    REQUIRE((generic_resolution_data(5) == ResolutionData{{2, 3, 3}, {4, 4}}));
    REQUIRE((generic_resolution_data(8) == ResolutionData{{3, 3, 4}, {5, 5}}));
    REQUIRE((generic_resolution_data(18) == ResolutionData{{5, 5, 5, 6}, {7, 7, 7}}));

    for (int n = 2; n <= 60; ++n) {
        const ResolutionData R = generic_resolution_data(n);
        REQUIRE_NOTHROW(R.validate());
        REQUIRE(points_count(R) == n);
        const auto [d, r] = d_r_for_n(n);
        REQUIRE(r_of(R, d) == r);
        REQUIRE(R.a.front() == d);
        // generic data is positive except in the square case r = 1 handled by d+1 gens
        REQUIRE(is_positive(R));
    }
    REQUIRE_THROWS_AS(generic_resolution_data(1), InputError);
}

TEST_CASE("sampled matrices have the right shape and are reproducible") {
    const ResolutionData R{{3, 3, 4}, {5, 5}};
    Rng rng(61);
    const FormMatrix A = sample_hb_matrix(F, R, rng);
    REQUIRE(A.rows() == 3);
    REQUIRE(A.cols() == 2);
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) {
            REQUIRE(A.entry_degree(i, j) == R.b[static_cast<std::size_t>(j)] -
                                                R.a[static_cast<std::size_t>(i)]);
            REQUIRE(A.at(i, j).degree() == A.entry_degree(i, j));
        }

    Rng rng2(61);
    const FormMatrix B = sample_hb_matrix(F, R, rng2);
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            REQUIRE(A.at(i, j).coeffs() == B.at(i, j).coeffs());

    Rng rng3(62);
    REQUIRE_THROWS_AS(sample_hb_matrix(F, {{2, 2, 3}, {3, 4}}, rng3), InputError);
}

TEST_CASE("maximal minors carry the generator degrees and satisfy Cramer") {
    const ResolutionData R{{3, 3, 4}, {5, 5}};
    Rng rng(63);
    const FormMatrix A = sample_hb_matrix(F, R, rng);
    const auto mins = minors_of(F, A);
    REQUIRE(mins.size() == 3);
    for (std::size_t i = 0; i < mins.size(); ++i)
        REQUIRE(mins[i].degree() == R.a[i]);

    // sum_i (-1)^i F_i A_{ij} = 0 for each column j
    for (int j = 0; j < A.cols(); ++j) {
        HomogeneousForm acc = HomogeneousForm::zero(3, R.b[static_cast<std::size_t>(j)]);
        for (int i = 0; i < A.rows(); ++i) {
            HomogeneousForm t = form_mul(F, mins[static_cast<std::size_t>(i)], A.at(i, j));
            acc = (i % 2 == 0) ? form_add(F, acc, t) : form_sub(F, acc, t);
        }
        REQUIRE(acc.is_zero());
    }
}

TEST_CASE("profile predictions from resolution data alone") {
    const ExpectedProfile one = expected_profile({{2, 2}, {4}});
    REQUIRE(one.classes.at(0) == ExpectedClass::Plane);
    REQUIRE(one.classes.at(1) == ExpectedClass::Plane);
    REQUIRE(one.classes.at(2) == ExpectedClass::EqualsZ); // k = 1, r = 2
    REQUIRE(one.ggds == std::vector<int>{2});
    REQUIRE(one.finite_degree == 4);

    const ExpectedProfile two = expected_profile({{3, 4, 5}, {6, 6}});
    REQUIRE(two.classes.at(3) == ExpectedClass::Curve);
    REQUIRE(two.classes.at(4) == ExpectedClass::Finite); // k = 2, r = 2
    REQUIRE(two.classes.at(5) == ExpectedClass::EqualsZ);
    REQUIRE(two.ggds == std::vector<int>{3, 4, 5});
    REQUIRE(two.finite_degree == 12);

    const ExpectedProfile big = expected_profile({{5, 5, 5, 6}, {7, 7, 7}});
    REQUIRE(big.classes.at(4) == ExpectedClass::Plane);
    REQUIRE(big.classes.at(5) == ExpectedClass::EqualsZ); // r = 3 already
    REQUIRE(big.classes.at(6) == ExpectedClass::EqualsZ);
    REQUIRE(big.ggds == std::vector<int>{5});

    REQUIRE_THROWS_AS(expected_profile({{2, 2, 3}, {3, 4}}), InputError);
}

TEST_CASE("rank-drop codimension formula") {
    REQUIRE(expected_codim_rank_locus(3, 2, 1) == 2);
    REQUIRE(expected_codim_rank_locus(3, 2, 0) == 6);
    REQUIRE(expected_codim_rank_locus(4, 3, 2) == 2);
    REQUIRE(expected_codim_rank_locus(5, 5, 5) == 0);
    REQUIRE_THROWS_AS(expected_codim_rank_locus(3, 2, 3), InputError);
    REQUIRE_THROWS_AS(expected_codim_rank_locus(3, 2, -1), InputError);
}

TEST_CASE("single sampled trials verify every claim") {
    const ResolutionData four{{2, 2}, {4}};
    Rng rng(64);
    const HbTrial t = verify_hb_sample(F, four, rng);
    REQUIRE(t.ok_points);
    REQUIRE(t.ok_resolution);
    REQUIRE(t.ok_reduced);
    REQUIRE(t.ok_profile);
    REQUIRE(t.ok_bezout);
    REQUIRE(t.passed());
    REQUIRE(t.profile.size() == 2);
    REQUIRE(t.profile[1].cls == EnvClass::EqualsZ);
    REQUIRE(t.profile[1].is_ggd);
}

TEST_CASE("trials expose the full observed chain") {
    const ResolutionData R{{3, 4, 5}, {6, 6}};
    Rng rng(65);
    const HbTrial t = verify_hb_sample(F, R, rng);
    REQUIRE(t.passed());
    REQUIRE(t.profile.size() == 5);
    REQUIRE(t.profile[2].cls == EnvClass::Curve);
    REQUIRE(t.profile[2].curve_degree == 3);
    REQUIRE(t.profile[2].excess == 0);
    REQUIRE(t.profile[2].smooth == Smoothness::Yes);
    REQUIRE(t.profile[3].cls == EnvClass::Finite);
    REQUIRE(t.profile[3].scheme_degree == 12);
    REQUIRE(t.profile[3].reduced);
    REQUIRE(t.profile[4].cls == EnvClass::EqualsZ);
    for (int d : {3, 4, 5}) REQUIRE(t.profile[static_cast<std::size_t>(d) - 1].is_ggd);
    REQUIRE_FALSE(t.profile[0].is_ggd);
}

TEST_CASE("trial streams are deterministic and almost never fail") {
    const ResolutionData R{{3, 3, 4}, {5, 5}};
    int passes = 0;
    for (std::uint64_t s = 0; s < 50; ++s) {
        Rng rng = Rng::substream(900, s);
        if (verify_hb_sample(F, R, rng).passed()) ++passes;
    }
    REQUIRE(passes >= 49);

    Rng a = Rng::substream(901, 7), b = Rng::substream(901, 7);
    const HbTrial ta = verify_hb_sample(F, R, a), tb = verify_hb_sample(F, R, b);
    REQUIRE(ta.passed() == tb.passed());
    REQUIRE(ta.profile.size() == tb.profile.size());
    for (std::size_t i = 0; i < ta.profile.size(); ++i) {
        REQUIRE(ta.profile[i].cls == tb.profile[i].cls);
        REQUIRE(ta.profile[i].scheme_degree == tb.profile[i].scheme_degree);
    }
}
