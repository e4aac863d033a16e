#include "frobkit/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace frobkit;

TEST_CASE("parse and format round trip", "[rational]") {
    CHECK(scalar_to_string(parse_scalar("3/4")) == "3/4");
    CHECK(scalar_to_string(parse_scalar("-3/4")) == "-3/4");
    CHECK(scalar_to_string(parse_scalar("7")) == "7");
    CHECK(scalar_to_string(parse_scalar("-7")) == "-7");
    CHECK(scalar_to_string(parse_scalar("0")) == "0");
}

TEST_CASE("parsing canonicalizes to lowest terms, positive denominator", "[rational]") {
    CHECK(parse_scalar("2/4") == Scalar(1) / 2);
    CHECK(scalar_to_string(parse_scalar("2/4")) == "1/2");
    CHECK(scalar_to_string(parse_scalar("-2/4")) == "-1/2");
    CHECK(scalar_to_string(parse_scalar("6/3")) == "2");
    CHECK(denominator(parse_scalar("-5/10")) == 2);
    CHECK(numerator(parse_scalar("-5/10")) == -5 / 5);
}

TEST_CASE("parse rejects junk", "[rational]") {
    for (const char* bad : {"", "/", "1/", "/2", "1/0", "a", "1.5", "1/2/3", "--2", "2 "})
        CHECK_THROWS_AS(parse_scalar(bad), Error);
}

TEST_CASE("integer powers, including negative exponents", "[rational]") {
    CHECK(scalar_pow(Scalar(2) / 3, 3) == Scalar(8) / 27);
    CHECK(scalar_pow(Scalar(2), -2) == Scalar(1) / 4);
    CHECK(scalar_pow(Scalar(-1) / 2, 2) == Scalar(1) / 4);
    CHECK(scalar_pow(Scalar(5), 0) == 1);
    CHECK_THROWS_AS(scalar_pow(Scalar(0), -1), Error);
}

TEST_CASE("factorial and binomial helpers", "[rational]") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(15, 3) == 455);
    CHECK(binomial(3, 5) == 0);
}
