#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "envlab/monomial.hpp"

using namespace envlab;

TEST_CASE("binomial matches a locally built Pascal triangle") {
    std::vector<std::vector<long>> pascal(31, std::vector<long>(31, 0));
    for (int n = 0; n <= 30; ++n) {
        pascal[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            pascal[n][k] = pascal[n - 1][k - 1] + (k <= n - 1 ? pascal[n - 1][k] : 0);
    }
    for (int n = 0; n <= 30; ++n)
        for (int k = 0; k <= n; ++k) REQUIRE(binomial(n, k) == pascal[n][k]);
    REQUIRE(binomial(5, -1) == 0);
    REQUIRE(binomial(5, 6) == 0);
}

TEST_CASE("monomial basis sizes and order") {
    const auto b0 = monomial_basis(3, 0);
    REQUIRE(b0.size() == 1);
    REQUIRE(b0[0] == Monomial{0, 0, 0});

    // degree 2 in x,y,z: x2, xy, xz, y2, yz, z2
    const auto b2 = monomial_basis(3, 2);
    REQUIRE(b2.size() == 6);
    REQUIRE(b2[0] == Monomial{2, 0, 0});
    REQUIRE(b2[1] == Monomial{1, 1, 0});
    REQUIRE(b2[2] == Monomial{1, 0, 1});
    REQUIRE(b2[3] == Monomial{0, 2, 0});
    REQUIRE(b2[4] == Monomial{0, 1, 1});
    REQUIRE(b2[5] == Monomial{0, 0, 2});

    REQUIRE(monomial_basis(6, 3).size() == 56); // C(8,5)
    REQUIRE(monomial_count(6, 3) == 56);
}

TEST_CASE("monomial rank is the basis index") {
    for (const auto& [nvars, d] : std::vector<std::pair<int, int>>{{3, 5}, {4, 3}, {6, 2}, {2, 7}}) {
        const auto basis = monomial_basis(nvars, d);
        REQUIRE(static_cast<int>(basis.size()) == monomial_count(nvars, d));
        for (std::size_t i = 0; i < basis.size(); ++i)
            REQUIRE(static_cast<std::size_t>(monomial_rank(basis[i])) == i);
    }
}

TEST_CASE("cached basis agrees with the direct computation") {
    REQUIRE(monomial_basis_cached(3, 4) == monomial_basis(3, 4));
    REQUIRE(monomial_basis_cached(12, 2) == monomial_basis(12, 2));
    // same object on repeat lookups
    REQUIRE(&monomial_basis_cached(3, 4) == &monomial_basis_cached(3, 4));
}

TEST_CASE("monomial degree sums exponents") {
    REQUIRE(monomial_degree(Monomial{1, 2, 3}) == 6);
    REQUIRE(monomial_degree(Monomial{0, 0, 0}) == 0);
}
