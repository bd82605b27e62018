#pragma once

#include <array>
#include <cmath>
#include <string>

#include "pitchsim/actuator.hpp"
#include "pitchsim/errors.hpp"
#include "pitchsim/rotor.hpp"

namespace pitchsim {

// Full reduced-order plant state: rotor speed plus three pitch actuators.
struct PlantState {
    double omega_r = 0.0;
    std::array<ActuatorState, 3> act{};
};

namespace detail {

constexpr int kPlantDim = 7;
using StateVec = std::array<double, kPlantDim>;

inline StateVec pack(const PlantState& s) {
    return {s.omega_r,
            s.act[0].theta, s.act[0].theta_dot,
            s.act[1].theta, s.act[1].theta_dot,
            s.act[2].theta, s.act[2].theta_dot};
}

inline PlantState unpack(const StateVec& v) {
    PlantState s;
    s.omega_r = v[0];
    for (int j = 0; j < 3; ++j) {
        s.act[j].theta = v[1 + 2 * j];
        s.act[j].theta_dot = v[2 + 2 * j];
    }
    return s;
}

inline StateVec plant_deriv(const TurbineParams& tp, const ActuatorParams& ap,
                            const StateVec& v, double nu,
                            const std::array<double, 3>& theta_r, const FaultFactors& f) {
    StateVec d;
    const std::array<double, 3> theta = {v[1], v[3], v[5]};
    d[0] = rotor_accel(tp, nu, v[0], theta);
    for (int j = 0; j < 3; ++j) {
        ActuatorState a{v[1 + 2 * j], v[2 + 2 * j]};
        auto [dth, dtd] = actuator_accel(ap, a, theta_r[j], f);
        d[1 + 2 * j] = dth;
        d[2 + 2 * j] = dtd;
    }
    return d;
}

} // namespace detail

// Advance the plant one fixed step with classical RK4. Wind, pitch commands and
// fault factors are held constant across the step (zero-order hold at the
// sample clock). Afterwards the pitch stops are enforced: position clamped to
// [0, theta_max] with the rate zeroed when pushing into a stop, and the
// optional symmetric rate limit applied.
inline PlantState plant_step(const TurbineParams& tp, const ActuatorParams& ap,
                             const PlantState& s, double nu,
                             const std::array<double, 3>& theta_r, const FaultFactors& f,
                             double dt) {
    if (dt <= 0.0) throw std::invalid_argument("plant_step: dt must be positive");
    using detail::StateVec;
    const StateVec x0 = detail::pack(s);
    const StateVec k1 = detail::plant_deriv(tp, ap, x0, nu, theta_r, f);
    StateVec x;
    for (int i = 0; i < detail::kPlantDim; ++i) x[i] = x0[i] + 0.5 * dt * k1[i];
    const StateVec k2 = detail::plant_deriv(tp, ap, x, nu, theta_r, f);
    for (int i = 0; i < detail::kPlantDim; ++i) x[i] = x0[i] + 0.5 * dt * k2[i];
    const StateVec k3 = detail::plant_deriv(tp, ap, x, nu, theta_r, f);
    for (int i = 0; i < detail::kPlantDim; ++i) x[i] = x0[i] + dt * k3[i];
    const StateVec k4 = detail::plant_deriv(tp, ap, x, nu, theta_r, f);
    for (int i = 0; i < detail::kPlantDim; ++i)
        x[i] = x0[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

    PlantState out = detail::unpack(x);
    for (auto& a : out.act) {
        if (a.theta < 0.0) {
            a.theta = 0.0;
            if (a.theta_dot < 0.0) a.theta_dot = 0.0;
        } else if (a.theta > tp.theta_max) {
            a.theta = tp.theta_max;
            if (a.theta_dot > 0.0) a.theta_dot = 0.0;
        }
        if (ap.rate_limit_enabled) {
            if (a.theta_dot > ap.rate_limit) a.theta_dot = ap.rate_limit;
            if (a.theta_dot < -ap.rate_limit) a.theta_dot = -ap.rate_limit;
        }
    }

    bool finite = std::isfinite(out.omega_r);
    for (const auto& a : out.act)
        finite = finite && std::isfinite(a.theta) && std::isfinite(a.theta_dot);
    if (!finite) throw numerics_error("plant integration diverged to a non-finite state");
    return out;
}

} // namespace pitchsim
