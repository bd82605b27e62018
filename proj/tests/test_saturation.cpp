#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "pitchsim/saturation.hpp"

using pitchsim::sat;

TEST_CASE("sat clamps to the interval") {
    CHECK(sat(0.0, -0.348, 1.222) == 0.0);
    CHECK(sat(100.0, -0.348, 1.222) == 1.222);
    CHECK(sat(-100.0, -0.348, 1.222) == -0.348);
    CHECK(sat(0.5, 0.5, 0.5) == 0.5);
}

TEST_CASE("sat rejects inverted bounds") {
    CHECK_THROWS_AS(sat(0.0, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("positive scaling factors out of the saturation") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uy(-5.0, 5.0), uchi(0.01, 100.0);
    for (int i = 0; i < 10000; ++i) {
        const double y = uy(rng);
        const double chi = uchi(rng);
        const double lhs = sat(chi * y, -0.348, 1.222);
        const double rhs = chi * sat(y, -0.348 / chi, 1.222 / chi);
        CHECK(lhs == Catch::Approx(rhs).margin(1e-12));
    }
}

TEST_CASE("unit sector constant inside the linear ball") {
    // for |y| <= r with r <= min(|lo|, hi), sat is the identity, so
    // y * sat(y, lo, hi) = y^2 exactly
    const double lo = -0.348, hi = 1.222;
    const double r = std::min(std::abs(lo), hi);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> uy(-r, r);
    for (int i = 0; i < 10000; ++i) {
        const double y = uy(rng);
        CHECK(y * sat(y, lo, hi) == y * y);
    }
}

TEST_CASE("sat is nondecreasing") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> uy(-3.0, 3.0);
    for (int i = 0; i < 1000; ++i) {
        double a = uy(rng), b = uy(rng);
        if (a > b) std::swap(a, b);
        CHECK(sat(a, -1.0, 1.0) <= sat(b, -1.0, 1.0));
    }
}
