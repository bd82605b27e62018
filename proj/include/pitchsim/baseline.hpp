#pragma once

#include <array>

#include "pitchsim/errors.hpp"
#include "pitchsim/saturation.hpp"

namespace pitchsim {

// Gain-scheduled PI collective-pitch regulator used as the comparison
// controller. Gains are rotor-side; the schedule halves the effective gain at
// pitch theta_k, mirroring the aerodynamic sensitivity doubling.
struct PiGains {
    double kp0 = 6.0;       // proportional gain at zero pitch [s]
    double ki0 = 2.5;       // integral gain at zero pitch
    double theta_k = 0.1099; // gain-scheduling corner angle [rad]
    double theta_max = 1.5707963267948966;

    void validate() const {
        if (kp0 <= 0.0 || ki0 <= 0.0 || theta_k <= 0.0)
            throw config_error("baseline PI gains must be positive");
    }
};

struct PiState {
    double integral = 0.0; // integral of the speed error [rad]
};

// Initialize the integral so the unsaturated output holds theta_hold at zero error.
inline PiState pi_init_hold(const PiGains& g, double theta_hold) {
    const double gk = 1.0 / (1.0 + theta_hold / g.theta_k);
    return PiState{theta_hold / (gk * g.ki0)};
}

// One PI update. The integral advances trapezoidally and freezes while the
// output is clamped (conditional-integration anti-windup). Returns the
// collective pitch demand.
inline std::array<double, 3> pi_control(double omega_r, double omega_r0, double theta_meas,
                                        PiState& s, const PiGains& g, double err_prev,
                                        double dt) {
    if (dt <= 0.0) throw std::invalid_argument("pi_control: dt must be positive");
    const double err = omega_r - omega_r0;
    const double gk = 1.0 / (1.0 + theta_meas / g.theta_k);
    const double candidate = s.integral + 0.5 * dt * (err_prev + err);
    const double raw = gk * (g.kp0 * err + g.ki0 * candidate);
    const double out = sat(raw, 0.0, g.theta_max);
    if (raw == out) s.integral = candidate; // freeze when clamped
    return {out, out, out};
}

} // namespace pitchsim
