#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "pitchsim/actuator.hpp"

using namespace pitchsim;

namespace {
const ActuatorParams kAct{};
} // namespace

TEST_CASE("commanded angle at rest is an equilibrium") {
    for (double c : {0.0, 0.3, 1.2}) {
        const auto [dth, dtd] = actuator_accel(kAct, ActuatorState{c, 0.0}, c, {0.7, 0.9});
        CHECK(dth == 0.0);
        CHECK(dtd == Catch::Approx(0.0).margin(1e-12));
    }
}

TEST_CASE("faultless factors reproduce the nominal coefficients") {
    const ActuatorState s{0.2, -0.4};
    const double tr = 0.5;
    const auto [dth, dtd] = actuator_accel(kAct, s, tr, {1.0, 1.0});
    const double wn2 = kAct.omega_n0 * kAct.omega_n0;
    CHECK(dth == s.theta_dot);
    CHECK(dtd == Catch::Approx(-2.0 * kAct.zeta0 * kAct.omega_n0 * s.theta_dot -
                               wn2 * s.theta + wn2 * tr));
}

TEST_CASE("faulted step from rest") {
    const auto [dth, dtd] = actuator_accel(kAct, ActuatorState{0.0, 0.0}, 1.0, {0.5, 0.8});
    CHECK(dth == 0.0);
    CHECK(dtd == Catch::Approx(0.5 * 11.11 * 11.11)); // 61.71605
    CHECK(dtd == Catch::Approx(61.71605).margin(1e-6));
}

TEST_CASE("natural-frequency degradation weakens the response monotonically") {
    double prev = 0.0;
    for (double delta : {0.2, 0.4, 0.6, 0.8, 1.0}) {
        const auto [dth, dtd] =
            actuator_accel(kAct, ActuatorState{0.0, 0.0}, 1.0, {delta, 1.0});
        CHECK(std::abs(dtd) > prev);
        prev = std::abs(dtd);
    }
}

TEST_CASE("fault factors outside (0,1] are rejected") {
    CHECK_THROWS_AS(actuator_accel(kAct, {}, 0.0, {0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(actuator_accel(kAct, {}, 0.0, {1.0, 1.2}), std::invalid_argument);
}

TEST_CASE("faultless actuator poles have negative real parts") {
    // roots of s^2 + 2 zeta0 wn0 s + wn0^2
    const double a = 2.0 * kAct.zeta0 * kAct.omega_n0;
    const double b = kAct.omega_n0 * kAct.omega_n0;
    const std::complex<double> disc = std::sqrt(std::complex<double>(a * a - 4.0 * b, 0.0));
    const std::complex<double> s1 = (-a + disc) / 2.0, s2 = (-a - disc) / 2.0;
    CHECK(s1.real() < 0.0);
    CHECK(s2.real() < 0.0);
}
