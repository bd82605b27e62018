#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "pitchsim/ctrl_high.hpp"

using namespace pitchsim;

namespace {
HighLevelGains design_gains() {
    HighLevelGains g;
    g.k = 55.0;
    g.psi = 0.5;
    g.gamma = 0.25;
    g.theta0 = 0.348;
    g.theta_max = 1.5707963267948966;
    return g;
}
} // namespace

TEST_CASE("filtered error combines the error and its integral") {
    HighLevelState s;
    CHECK(filtered_error(1.267, 1.267, s, 0.5) == 0.0);
    s.omega_err_int = 0.2;
    CHECK(filtered_error(1.367, 1.267, s, 0.5) == Catch::Approx(0.2));
}

TEST_CASE("trapezoidal integration of a constant error is exact") {
    // constant error e from a zero integral gives sigma(T) = e (1 + psi T)
    const double e = 0.01, psi = 0.5, dt = 0.002, T = 10.0;
    HighLevelState s;
    const int n = static_cast<int>(T / dt);
    for (int i = 0; i < n; ++i) integrate_error(s, e, e, dt, 0.0);
    const double sigma = e + psi * s.omega_err_int;
    CHECK(sigma == Catch::Approx(e * (1.0 + psi * T)).epsilon(1e-12));
}

TEST_CASE("integral anti-windup clamps the state") {
    HighLevelState s;
    for (int i = 0; i < 1000; ++i) integrate_error(s, 1.0, 1.0, 0.1, 1.0);
    CHECK(s.omega_err_int == 1.0);
}

TEST_CASE("zero filtered error commands the operating pitch") {
    const auto g = design_gains();
    const auto thd = high_level_control(0.0, g);
    for (double v : thd) CHECK(v == Catch::Approx(g.theta0));
}

TEST_CASE("large filtered error feathers all blades") {
    const auto g = design_gains();
    const auto thd = high_level_control(1.0, g); // k sigma far beyond the band
    for (double v : thd) CHECK(v == Catch::Approx(g.theta_max));
}

TEST_CASE("hand-computed unsaturated demand") {
    const auto g = design_gains();
    const auto thd = high_level_control(0.01, g); // k sigma = 0.55
    for (double v : thd) CHECK(v == Catch::Approx(0.898));
}

TEST_CASE("demand always lies inside the mechanical range") {
    auto g = design_gains();
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> us(-5.0, 5.0);
    for (int i = 0; i < 5000; ++i) {
        for (double v : high_level_control(us(rng), g)) {
            CHECK(v >= 0.0);
            CHECK(v <= g.theta_max);
        }
    }
    // even with a non-unit direction vector
    g.rho0 = {-2.0, 0.5, -1.0};
    for (int i = 0; i < 5000; ++i) {
        for (double v : high_level_control(us(rng), g)) {
            CHECK(v >= 0.0);
            CHECK(v <= g.theta_max);
        }
    }
}

TEST_CASE("collective demand is nondecreasing in the filtered error") {
    const auto g = design_gains();
    double prev = -1.0;
    for (double sigma = -0.1; sigma <= 0.1; sigma += 1e-3) {
        const double v = high_level_control(sigma, g)[0];
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("gain bound reproduces the published arithmetic") {
    CHECK(gain_bound(1.0, 1.5, 0.15, 0.5, 0.25) == Catch::Approx(54.17).margin(0.01));
}

TEST_CASE("gain bound drops its disturbance term as gamma grows") {
    const double limit = gain_bound(1.0, 1.5, 0.15, 0.5, 1e9);
    const double expected = (1.0 + (1.5 + 1.0) * (1.5 + 1.0) / (4.0 * 0.5)) / 0.15;
    CHECK(limit == Catch::Approx(expected).epsilon(1e-6));
}

TEST_CASE("doubling the conic constant halves the bound") {
    const double k1 = gain_bound(1.0, 1.5, 0.15, 0.5, 0.25);
    const double k2 = gain_bound(1.0, 1.5, 0.30, 0.5, 0.25);
    CHECK(k1 == Catch::Approx(2.0 * k2).epsilon(1e-12));
}

TEST_CASE("degenerate conic constant is rejected") {
    CHECK_THROWS_AS(gain_bound(1.0, 1.5, 0.0, 0.5, 0.25), config_error);
    CHECK_THROWS_AS(gain_bound(-1.0, 1.5, 0.15, 0.5, 0.25), std::invalid_argument);
}

TEST_CASE("storage function is positive definite") {
    HighLevelState s;
    CHECK(high_level_energy(0.0, s, 0.5) == 0.0);
    s.omega_err_int = 0.3;
    CHECK(high_level_energy(0.1, s, 0.5) ==
          Catch::Approx(0.5 * 0.01 + 0.5 * 0.25 * 0.09));
}
