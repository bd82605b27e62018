#pragma once

#include <array>
#include <cmath>
#include <string>

#include "pitchsim/errors.hpp"

namespace pitchsim {

// Aerodynamic/inertial constants of the one-state rotor model.
struct TurbineParams {
    double kappa = 7622.7;           // aerodynamic scale constant
    double inertia = 43784700.0;    // total drive-train inertia J [kg m^2]
    double rated_power = 5.0e6;     // rated mechanical power P0 [W]
    double p1 = 5.4148;             // aerodynamic coefficients, radian pitch convention
    double p2 = 0.25;
    double p3 = 59.60501704163281;
    double theta_max = 1.5707963267948966;  // mechanical pitch stop [rad]
    double omega_floor = 0.05;      // abort threshold for rotor speed [rad/s]

    void validate() const {
        if (kappa <= 0 || inertia <= 0 || rated_power <= 0 ||
            p1 <= 0 || p2 <= 0 || p3 <= 0 || theta_max <= 0 || omega_floor <= 0)
            throw config_error("turbine parameters must be strictly positive");
    }
};

// Aerodynamic torque terms. g1 is the zero-pitch specific acceleration,
// g2 scales the ||theta||^2 pitch decay.
inline double rotor_g1(const TurbineParams& p, double nu, double omega_r) {
    const double s = nu / omega_r;
    return p.kappa * nu * nu * nu / (p.inertia * omega_r) * (s - p.p1) * std::exp(-p.p2 * s)
           - p.rated_power / (p.inertia * omega_r);
}

inline double rotor_g2(const TurbineParams& p, double nu, double omega_r) {
    const double s = nu / omega_r;
    return p.kappa * nu * nu * nu / (3.0 * p.inertia * omega_r) * p.p3 * std::exp(-p.p2 * s);
}

// d(omega_r)/dt for wind nu and the three pitch angles.
inline double rotor_accel(const TurbineParams& p, double nu, double omega_r,
                          const std::array<double, 3>& theta) {
    if (omega_r <= p.omega_floor)
        throw numerics_error("rotor speed " + std::to_string(omega_r) +
                             " rad/s at or below singularity floor");
    if (nu <= 0.0) throw std::invalid_argument("rotor_accel: wind speed must be positive");
    const double n2 = theta[0] * theta[0] + theta[1] * theta[1] + theta[2] * theta[2];
    return rotor_g1(p, nu, omega_r) - rotor_g2(p, nu, omega_r) * n2;
}

// Analytic partial derivatives of the rotor acceleration. These back the
// robustness-bound evaluation and are checked against finite differences.
inline double rotor_accel_dnu(const TurbineParams& p, double nu, double omega_r,
                              const std::array<double, 3>& theta) {
    const double a = p.kappa / p.inertia;
    const double w = omega_r;
    const double E = std::exp(-p.p2 * nu / w);
    const double n2 = theta[0] * theta[0] + theta[1] * theta[1] + theta[2] * theta[2];
    const double dg1 = a * E * (4.0 * nu * nu * nu / (w * w) - 3.0 * p.p1 * nu * nu / w
                                - (p.p2 / w) * (nu * nu * nu * nu / (w * w) - p.p1 * nu * nu * nu / w));
    const double dg2 = (a * p.p3 / 3.0) * E * (3.0 * nu * nu / w - p.p2 * nu * nu * nu / (w * w));
    return dg1 - dg2 * n2;
}

inline double rotor_accel_domega(const TurbineParams& p, double nu, double omega_r,
                                 const std::array<double, 3>& theta) {
    const double a = p.kappa / p.inertia;
    const double w = omega_r;
    const double E = std::exp(-p.p2 * nu / w);
    const double nu4 = nu * nu * nu * nu;
    const double nu3 = nu * nu * nu;
    const double n2 = theta[0] * theta[0] + theta[1] * theta[1] + theta[2] * theta[2];
    const double dg1 = a * E * (-2.0 * nu4 / (w * w * w) + p.p1 * nu3 / (w * w)
                                + (p.p2 * nu / (w * w)) * (nu4 / (w * w) - p.p1 * nu3 / w))
                       + p.rated_power / (p.inertia * w * w);
    const double dg2 = (a * p.p3 / 3.0) * E * (-nu3 / (w * w) + p.p2 * nu4 / (w * w * w));
    return dg1 - dg2 * n2;
}

// Gradient with respect to the pitch vector: -2 g2 theta_j per blade.
inline std::array<double, 3> rotor_accel_dtheta(const TurbineParams& p, double nu, double omega_r,
                                                const std::array<double, 3>& theta) {
    const double g2 = rotor_g2(p, nu, omega_r);
    return {-2.0 * g2 * theta[0], -2.0 * g2 * theta[1], -2.0 * g2 * theta[2]};
}

} // namespace pitchsim
