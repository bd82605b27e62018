#pragma once

#include <cmath>
#include <stdexcept>

#include "pitchsim/errors.hpp"
#include "pitchsim/saturation.hpp"

namespace pitchsim {

// Per-actuator adaptive tracking controller gains.
struct LowLevelGains {
    double k_theta = 2.5; // tracking gain [s]
    double alpha = 20.0;  // adaptation gain
    double zeta0 = 0.6;
    double omega_n0 = 11.11;
    double eta_max = 0.0; // projection bound on |eta_hat|; <= 0 disables

    void validate() const {
        if (k_theta <= 0.0 || alpha <= 0.0)
            throw config_error("low-level gains k_theta and alpha must be positive");
        if (zeta0 <= 0.0 || omega_n0 <= 0.0)
            throw config_error("low-level nominal actuator constants must be positive");
    }
};

// Adaptive estimate of the fault-induced uncertain parameter, per blade.
struct LowLevelState {
    double eta_hat = 0.0; // [s]
};

// Filtered tracking error z = theta_dot + 2 zeta0 omega_n0 (theta - theta_d).
// The demand rate is treated as zero under time-scale separation.
inline double filtered_tracking_error(double theta, double theta_dot, double theta_d,
                                      double zeta0, double omega_n0) {
    return theta_dot + 2.0 * zeta0 * omega_n0 * (theta - theta_d);
}

// Pitch reference theta_r = theta - k_theta z + eta_hat theta_dot.
inline double low_level_control(double theta, double theta_dot, double z,
                                const LowLevelState& s, const LowLevelGains& g) {
    return theta - g.k_theta * z + s.eta_hat * theta_dot;
}

// Explicit-Euler step of the adaptation law eta_hat' = -alpha z theta_dot.
inline void adapt(LowLevelState& s, double z, double theta_dot, double alpha, double dt,
                  double eta_max = 0.0) {
    if (dt <= 0.0) throw std::invalid_argument("adapt: dt must be positive");
    s.eta_hat -= alpha * z * theta_dot * dt;
    if (eta_max > 0.0) s.eta_hat = sat(s.eta_hat, -eta_max, eta_max);
}

// True uncertain parameter under fault (delta, rho); telemetry/test use only.
inline double eta_true(double delta, double rho, double zeta0, double omega_n0) {
    if (delta <= 0.0) throw std::invalid_argument("eta_true: delta must be positive");
    return 2.0 * (rho * zeta0 * omega_n0 - zeta0 * omega_n0) / (delta * omega_n0 * omega_n0);
}

// Lyapunov function of the (z, eta-error) pair for one blade.
inline double low_level_energy(double z, double eta_hat, double eta, double delta,
                               const LowLevelGains& g) {
    const double e = eta_hat - eta;
    return 0.5 * z * z + delta * g.omega_n0 * g.omega_n0 / (2.0 * g.alpha) * e * e;
}

} // namespace pitchsim
