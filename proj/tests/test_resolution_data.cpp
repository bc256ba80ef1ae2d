#include <catch2/catch_amalgamated.hpp>

#include "envlab/resolution_data.hpp"

using namespace envlab;

TEST_CASE("validate accepts well-formed data and rejects the rest") {
    ResolutionData ok{{3, 3, 4}, {5, 5}};
    REQUIRE_NOTHROW(ok.validate());
    REQUIRE(ok.k() == 2);

    REQUIRE_THROWS_AS((ResolutionData{{2}, {}}.validate()), MathError);           // no syzygies
    REQUIRE_THROWS_AS((ResolutionData{{2, 2}, {2, 2}}.validate()), MathError);    // wrong count
    REQUIRE_THROWS_AS((ResolutionData{{3, 2}, {5}}.validate()), MathError);       // a not ascending
    REQUIRE_THROWS_AS((ResolutionData{{2, 2, 2}, {4, 2}}.validate()), MathError); // b not ascending
    REQUIRE_THROWS_AS((ResolutionData{{0, 2}, {2}}.validate()), MathError);       // nonpositive degree
    REQUIRE_THROWS_AS((ResolutionData{{2, 3}, {4}}.validate()), MathError);       // sums differ
}

TEST_CASE("positivity compares max generator against min syzygy degree") {
    REQUIRE(is_positive({{2, 2}, {4}}));
    REQUIRE(is_positive({{3, 3, 4}, {5, 5}}));
    REQUIRE_FALSE(is_positive({{2, 2, 3}, {3, 4}})); // a line plus a point off it
}

TEST_CASE("point count identity") {
    REQUIRE(points_count({{2, 2}, {4}}) == 4);
    REQUIRE(points_count({{3, 3}, {6}}) == 9);
    REQUIRE(points_count({{3, 3, 4}, {5, 5}}) == 8);
    REQUIRE(points_count({{5, 5, 5, 6}, {7, 7, 7}}) == 18);
    REQUIRE(points_count({{3, 4, 5}, {6, 6}}) == 11);
    // odd or nonpositive n is a hard error
    REQUIRE_THROWS_AS(points_count({{2, 2}, {3}}), MathError); // (9 - 8)/2 is not integral
    REQUIRE_THROWS_AS(points_count({{3, 3}, {2}}), MathError); // negative
}

TEST_CASE("r(d) counts generator degrees below the cutoff") {
    const ResolutionData R{{3, 3, 4}, {5, 5}};
    REQUIRE(r_of(R, 2) == 0);
    REQUIRE(r_of(R, 3) == 2);
    REQUIRE(r_of(R, 4) == 3);
    REQUIRE(r_of(R, 100) == 3);
}

TEST_CASE("format and parse round trip") {
    const ResolutionData R{{3, 3, 4}, {5, 5}};
    REQUIRE(format_resolution_data(R) == "a=3,3,4 b=5,5");
    REQUIRE(parse_resolution_data("a=3,3,4 b=5,5") == R);
    REQUIRE(parse_resolution_data("b=5,5 a=3,3,4") == R); // order-insensitive
    REQUIRE((parse_resolution_data(format_resolution_data({{2, 2}, {4}})) == ResolutionData{{2, 2}, {4}}));
}

TEST_CASE("malformed text is an input error") {
    REQUIRE_THROWS_AS(parse_resolution_data(""), InputError);
    REQUIRE_THROWS_AS(parse_resolution_data("a=2,2"), InputError);           // missing b
    REQUIRE_THROWS_AS(parse_resolution_data("a=2,2 b="), InputError);        // empty list
    REQUIRE_THROWS_AS(parse_resolution_data("a=2,x b=4"), InputError);       // bad integer
    REQUIRE_THROWS_AS(parse_resolution_data("a=2,,2 b=4"), InputError);      // empty entry
    REQUIRE_THROWS_AS(parse_resolution_data("a=2,2 b=4 c=1"), InputError);   // stray token
    REQUIRE_THROWS_AS(parse_resolution_data("a=2,4 b=5"), InputError);       // fails validation
}
