#include <catch2/catch_amalgamated.hpp>

#include "envlab/field.hpp"

using namespace envlab;

TEST_CASE("prime field axioms hold on random triples") {
    const PrimeField F(kDefaultPrime);
    Rng rng(42);
    for (int i = 0; i < 1000; ++i) {
        const Scalar a = rng.scalar(F), b = rng.scalar(F), c = rng.scalar(F);
        REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
        REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        REQUIRE(F.add(a, F.neg(a)) == 0);
        REQUIRE(F.sub(a, b) == F.add(a, F.neg(b)));
        if (a != 0) {
            REQUIRE(F.mul(a, F.inv(a)) == 1);
            REQUIRE(F.div(b, a) == F.mul(b, F.inv(a)));
        }
    }
}

TEST_CASE("reduce handles negatives and multiples of p") {
    const PrimeField F(32003);
    REQUIRE(F.reduce(-1) == 32002);
    REQUIRE(F.reduce(32003) == 0);
    REQUIRE(F.reduce(64007) == 1);
    REQUIRE(F.reduce(-32004) == 32002);
}

TEST_CASE("pow matches repeated multiplication and Fermat") {
    const PrimeField F(101);
    Scalar x = 1;
    for (int i = 0; i < 13; ++i) x = F.mul(x, 7);
    REQUIRE(F.pow(7, 13) == x);
    REQUIRE(F.pow(7, 100) == 1); // a^(p-1) = 1
    REQUIRE(F.pow(0, 0) == 1);
}

TEST_CASE("primality testing") {
    REQUIRE(is_prime(2));
    REQUIRE(is_prime(101));
    REQUIRE(is_prime(32003));
    REQUIRE(is_prime(2147483647u)); // 2^31 - 1
    REQUIRE_FALSE(is_prime(1));
    REQUIRE_FALSE(is_prime(32004));
    REQUIRE_FALSE(is_prime(1000001)); // 101 * 9901
    REQUIRE_THROWS_AS(PrimeField(32004), InputError);
    REQUIRE_THROWS_AS(PrimeField(0), InputError);
}

TEST_CASE("rng substreams are deterministic and independent of call order") {
    const PrimeField F(32003);
    Rng a = Rng::substream(7, 3);
    Rng b = Rng::substream(7, 3);
    for (int i = 0; i < 50; ++i) REQUIRE(a.next() == b.next());

    Rng c = Rng::substream(7, 4);
    Rng d = Rng::substream(7, 3);
    bool differ = false;
    for (int i = 0; i < 50; ++i)
        if (c.next() != d.next()) differ = true;
    REQUIRE(differ);

    Rng base(9);
    Rng f1 = base.fork(1);
    Rng f1b = Rng(9).fork(1);
    REQUIRE(f1.next() == f1b.next());
}

TEST_CASE("rng draws respect their ranges") {
    const PrimeField F(97);
    Rng rng(5);
    for (int i = 0; i < 500; ++i) {
        REQUIRE(rng.below(13) < 13);
        REQUIRE(rng.scalar(F) < 97);
        const Scalar nz = rng.nonzero_scalar(F);
        REQUIRE(nz > 0);
        REQUIRE(nz < 97);
    }
}
