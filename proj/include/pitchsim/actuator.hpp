#pragma once

#include <utility>

#include "pitchsim/errors.hpp"

namespace pitchsim {

// Second-order hydraulic pitch actuator, nominal operating constants.
struct ActuatorParams {
    double zeta0 = 0.6;     // nominal damping ratio
    double omega_n0 = 11.11; // nominal natural frequency [rad/s]
    bool rate_limit_enabled = false;
    double rate_limit = 0.14; // |theta_dot| cap when enabled [rad/s]

    void validate() const {
        if (zeta0 <= 0.0 || zeta0 > 1.0) throw config_error("zeta0 must lie in (0,1]");
        if (omega_n0 <= 0.0) throw config_error("omega_n0 must be positive");
        if (rate_limit <= 0.0) throw config_error("rate limit must be positive");
    }
};

struct ActuatorState {
    double theta = 0.0;     // pitch angle [rad]
    double theta_dot = 0.0; // pitch rate [rad/s]
};

// Degradation factors of the high-air-content fault. (1,1) is faultless.
struct FaultFactors {
    double delta = 1.0; // natural-frequency factor: omega_n^2 = delta*omega_n0^2
    double rho = 1.0;   // damping factor: zeta*omega_n = rho*zeta0*omega_n0
};

// (d theta/dt, d theta_dot/dt) for reference command theta_r under fault (delta, rho).
inline std::pair<double, double> actuator_accel(const ActuatorParams& p, const ActuatorState& s,
                                                double theta_r, const FaultFactors& f) {
    if (f.delta <= 0.0 || f.delta > 1.0 || f.rho <= 0.0 || f.rho > 1.0)
        throw std::invalid_argument("fault factors must lie in (0,1]");
    const double wn0sq = p.omega_n0 * p.omega_n0;
    const double acc = -2.0 * f.rho * p.zeta0 * p.omega_n0 * s.theta_dot
                       - f.delta * wn0sq * s.theta + f.delta * wn0sq * theta_r;
    return {s.theta_dot, acc};
}

} // namespace pitchsim
