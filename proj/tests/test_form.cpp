#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "envlab/form.hpp"

using namespace envlab;

namespace {
const PrimeField F(kDefaultPrime);

HomogeneousForm var(int i) { return HomogeneousForm::variable(3, i); }
} // namespace

TEST_CASE("form evaluation at points") {
    const HomogeneousForm xy = form_mul(F, var(0), var(1));
    REQUIRE(form_eval(F, xy, {1, 1, 1}) == 1);

    // x^2 - yz vanishes at (1,1,1)
    HomogeneousForm conic = HomogeneousForm::term(3, Monomial{2, 0, 0}, 1);
    conic = form_add(F, conic, HomogeneousForm::term(3, Monomial{0, 1, 1}, F.neg(1)));
    REQUIRE(form_eval(F, conic, {1, 1, 1}) == 0);

    const HomogeneousForm x3 = HomogeneousForm::term(3, Monomial{3, 0, 0}, 1);
    REQUIRE(form_eval(F, x3, {0, 1, 5}) == 0);
}

TEST_CASE("form multiplication basics") {
    REQUIRE(form_mul(F, var(0), var(1)) == HomogeneousForm::term(3, Monomial{1, 1, 0}, 1));

    const HomogeneousForm sum = form_add(F, var(0), var(1));
    const HomogeneousForm diff = form_sub(F, var(0), var(1));
    HomogeneousForm want = HomogeneousForm::term(3, Monomial{2, 0, 0}, 1);
    want = form_add(F, want, HomogeneousForm::term(3, Monomial{0, 2, 0}, F.neg(1)));
    REQUIRE(form_mul(F, sum, diff) == want);

    const HomogeneousForm z2 = HomogeneousForm::zero(3, 2);
    const HomogeneousForm prod = form_mul(F, z2, want);
    REQUIRE(prod.is_zero());
    REQUIRE(prod.degree() == 4);
}

TEST_CASE("partial derivatives") {
    const HomogeneousForm x2 = HomogeneousForm::term(3, Monomial{2, 0, 0}, 1);
    const auto px = form_partials(F, x2);
    REQUIRE(px[0] == HomogeneousForm::variable(3, 0, 2));
    REQUIRE(px[1].is_zero());
    REQUIRE(px[2].is_zero());

    const HomogeneousForm xyz = HomogeneousForm::term(3, Monomial{1, 1, 1}, 1);
    const auto pxyz = form_partials(F, xyz);
    REQUIRE(pxyz[0] == HomogeneousForm::term(3, Monomial{0, 1, 1}, 1));
    REQUIRE(pxyz[1] == HomogeneousForm::term(3, Monomial{1, 0, 1}, 1));
    REQUIRE(pxyz[2] == HomogeneousForm::term(3, Monomial{1, 1, 0}, 1));

    // Fermat cubic
    HomogeneousForm fermat = HomogeneousForm::term(3, Monomial{3, 0, 0}, 1);
    fermat = form_add(F, fermat, HomogeneousForm::term(3, Monomial{0, 3, 0}, 1));
    fermat = form_add(F, fermat, HomogeneousForm::term(3, Monomial{0, 0, 3}, 1));
    const auto pf = form_partials(F, fermat);
    REQUIRE(pf[0] == HomogeneousForm::term(3, Monomial{2, 0, 0}, 3));
    REQUIRE(pf[1] == HomogeneousForm::term(3, Monomial{0, 2, 0}, 3));
    REQUIRE(pf[2] == HomogeneousForm::term(3, Monomial{0, 0, 2}, 3));
}

TEST_CASE("evaluation is a ring homomorphism on random forms") {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const HomogeneousForm f = HomogeneousForm::random(F, rng, 3, 2);
        const HomogeneousForm g = HomogeneousForm::random(F, rng, 3, 3);
        const HomogeneousForm h = HomogeneousForm::random(F, rng, 3, 2);
        const std::vector<Scalar> P{rng.scalar(F), rng.scalar(F), rng.scalar(F)};
        REQUIRE(form_eval(F, form_mul(F, f, g), P) ==
                F.mul(form_eval(F, f, P), form_eval(F, g, P)));
        REQUIRE(form_eval(F, form_add(F, f, h), P) ==
                F.add(form_eval(F, f, P), form_eval(F, h, P)));
    }
}

TEST_CASE("random forms carry the requested shape") {
    Rng rng(12);
    const HomogeneousForm f = HomogeneousForm::random(F, rng, 3, 5);
    REQUIRE(f.nvars() == 3);
    REQUIRE(f.degree() == 5);
    REQUIRE(f.coeffs().size() == static_cast<std::size_t>(monomial_count(3, 5)));
}
