#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "thetadft/rational.hpp"

using thetadft::BigInt;
using thetadft::Rational;

TEST_CASE("Rational stores reduced form with positive denominator", "[rational]") {
    REQUIRE(Rational(2, 4) == Rational(1, 2));
    REQUIRE(Rational(-2, 4) == Rational(-1, 2));
    REQUIRE(Rational(3, -6) == Rational(-1, 2));
    REQUIRE(Rational(0, 7) == Rational(0));
    REQUIRE(Rational(3, -6).den() == 2);
    REQUIRE(Rational(-9, 3).num() == -3);
    REQUIRE(Rational(-9, 3).den() == 1);
}

TEST_CASE("Rational arithmetic is exact", "[rational]") {
    REQUIRE(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    REQUIRE(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    REQUIRE(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    REQUIRE(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    REQUIRE((-Rational(1, 3)).num() == -1);
    REQUIRE_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    REQUIRE_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("Rational round-trips: (p/q + r/s) - r/s = p/q", "[rational][property]") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<long long> num(-1000000, 1000000);
    std::uniform_int_distribution<long long> den(1, 1000000);
    for (int i = 0; i < 500; ++i) {
        Rational a(num(rng), den(rng));
        Rational b(num(rng), den(rng));
        REQUIRE((a + b) - b == a);
        if (!b.is_zero()) REQUIRE((a / b) * b == a);
    }
}

TEST_CASE("Rational converts to floating point", "[rational]") {
    REQUIRE(Rational(1, 2).to_real() == 0.5);
    REQUIRE(Rational(-3, 4).to_real() == -0.75);
    REQUIRE(Rational(1, 3).to_real<long double>() ==
            Catch::Approx(1.0L / 3.0L).epsilon(1e-18));
}
