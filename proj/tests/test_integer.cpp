#include <doctest.h>

#include <cmath>

#include "hypertel/integer.hpp"

using namespace hypertel;

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Int("2432902008176640000"));
    CHECK(binomial_int(Int(10), 3) == 120);
    CHECK(binomial_int(Int(10), 0) == 1);
    CHECK(binomial_int(Int(3), 5) == 0);
    CHECK(binomial_int(Int(-2), 3) == -4); // (-2)(-3)(-4)/6
}

TEST_CASE("pow, gcd, lcm") {
    CHECK(pow_int(Int(3), 0) == 1);
    CHECK(pow_int(Int(2), 13) == 8192);
    CHECK(gcd_int(Int(12), Int(-18)) == 6);
    CHECK(gcd_int(Int(0), Int(0)) == 0);
    CHECK(lcm_int(Int(4), Int(6)) == 12);
}

TEST_CASE("ln_of stays accurate beyond double range") {
    CHECK(ln_of(Int(1)) == doctest::Approx(0.0));
    CHECK(ln_of(Int(8192)) == doctest::Approx(13 * std::log(2.0)));
    Int big = pow_int(Int(10), 400);
    CHECK(ln_of(big) == doctest::Approx(400 * std::log(10.0)).epsilon(1e-12));
}

TEST_CASE("stirling rows") {
    auto s2 = stirling2_row(4);
    REQUIRE(s2.size() == 5);
    CHECK(s2[0] == 0);
    CHECK(s2[1] == 1);
    CHECK(s2[2] == 7);
    CHECK(s2[3] == 6);
    CHECK(s2[4] == 1);

    auto s1 = stirling1_signed_row(3); // x(x-1)(x-2) = x^3 - 3x^2 + 2x
    REQUIRE(s1.size() == 4);
    CHECK(s1[0] == 0);
    CHECK(s1[1] == 2);
    CHECK(s1[2] == -3);
    CHECK(s1[3] == 1);
}

TEST_CASE("string round trip") {
    Int v("-123456789012345678901234567890");
    CHECK(int_from_string(int_to_string(v)) == v);
    CHECK_THROWS_AS(int_from_string("12x"), Error);
}

TEST_CASE("to_long_checked rejects overflow") {
    CHECK(to_long_checked(Int(42), "x") == 42);
    CHECK_THROWS_AS(to_long_checked(pow_int(Int(2), 80), "x"), Error);
}
