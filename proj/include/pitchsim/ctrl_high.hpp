#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "pitchsim/errors.hpp"
#include "pitchsim/saturation.hpp"

namespace pitchsim {

// High-level L2 rotor-speed regulator gains.
struct HighLevelGains {
    double k = 55.0;       // control gain
    double psi = 0.5;      // filter gain on the error integral
    double gamma = 0.25;   // disturbance attenuation level
    std::array<double, 3> rho0 = {-1.0, -1.0, -1.0}; // control direction
    double theta0 = 0.3480186528476693;  // operating pitch [rad]
    double theta_max = 1.5707963267948966;
    double i_max = 1.0;    // integral magnitude cap; <= 0 disables

    void validate() const {
        if (k <= 0.0 || psi <= 0.0 || gamma <= 0.0)
            throw config_error("high-level gains k, psi, gamma must be positive");
        if (theta0 <= 0.0 || theta0 >= theta_max)
            throw config_error("operating pitch must lie strictly inside (0, theta_max)");
    }
};

// Controller memory: integral of the rotor-speed error.
struct HighLevelState {
    double omega_err_int = 0.0; // [rad]
};

// Filtered error sigma = (omega_r - omega_r0) + psi * integral.
inline double filtered_error(double omega_r, double omega_r0, const HighLevelState& s,
                             double psi) {
    return (omega_r - omega_r0) + psi * s.omega_err_int;
}

// Trapezoidal integral update with optional anti-windup clamp.
inline void integrate_error(HighLevelState& s, double err_prev, double err_now, double dt,
                            double i_max) {
    s.omega_err_int += 0.5 * dt * (err_prev + err_now);
    if (i_max > 0.0) s.omega_err_int = sat(s.omega_err_int, -i_max, i_max);
}

// Desired pitch per blade: theta0 - rho0_j * sat(k sigma, -theta0, theta_max-theta0).
// The final clamp keeps commands inside the mechanical range for any rho0.
inline std::array<double, 3> high_level_control(double sigma, const HighLevelGains& g) {
    const double u = sat(g.k * sigma, -g.theta0, g.theta_max - g.theta0);
    std::array<double, 3> theta_d;
    for (int j = 0; j < 3; ++j)
        theta_d[j] = sat(g.theta0 - g.rho0[j] * u, 0.0, g.theta_max);
    return theta_d;
}

// Sufficient lower bound on the control gain for attenuation level gamma:
// k >= (1/(mu*phi)) (1 + (rho_omega+2 psi)^2/(4 psi) + rho_nu^2/(4 gamma^2)).
inline double gain_bound(double rho_nu_bar, double rho_omega_bar, double mu_phi, double psi,
                         double gamma) {
    if (mu_phi <= 0.0)
        throw config_error("degenerate conic: mu*phi must be positive");
    if (rho_nu_bar <= 0.0 || rho_omega_bar <= 0.0 || psi <= 0.0 || gamma <= 0.0)
        throw std::invalid_argument("gain_bound: all inputs must be positive");
    const double a = rho_omega_bar + 2.0 * psi;
    return (1.0 + a * a / (4.0 * psi) + rho_nu_bar * rho_nu_bar / (4.0 * gamma * gamma)) / mu_phi;
}

// Storage function of the high-level loop: V = sigma^2/2 + (psi^2/2) I^2.
inline double high_level_energy(double sigma, const HighLevelState& s, double psi) {
    return 0.5 * sigma * sigma + 0.5 * psi * psi * s.omega_err_int * s.omega_err_int;
}

} // namespace pitchsim
