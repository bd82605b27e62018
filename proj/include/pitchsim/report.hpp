#pragma once

#include <string>

#include "pitchsim/design.hpp"
#include "pitchsim/errors.hpp"

#include "json.hpp"

namespace pitchsim {

// Design report consumed by the simulation harness: fitted coefficients,
// computed robustness bounds, and the gain condition along both routes
// (published bound inputs and envelope-computed bounds).
inline nlohmann::json design_report(const TurbineParams& tp, const OperatingPoint& op,
                                    const FitResult& fit, const RobustnessBounds& computed,
                                    double psi, double gamma, double rho_nu_published = 1.0,
                                    double rho_omega_published = 1.5,
                                    double mu_phi_published = 0.15) {
    RobustnessBounds published;
    published.rho_nu_bar = rho_nu_published;
    published.rho_omega_bar = rho_omega_published;
    published.phi = mu_phi_published;
    published.mu = 1.0;
    nlohmann::json j;
    j["turbine"] = {{"kappa", tp.kappa},     {"inertia", tp.inertia},
                    {"rated_power", tp.rated_power}, {"theta_max", tp.theta_max}};
    j["operating_point"] = {{"omega_r0", op.omega_r0}, {"nu0", op.nu0}, {"theta0", op.theta0}};
    j["fit"] = {{"p1", fit.p1},           {"p2", fit.p2},
                {"p3", fit.p3},           {"p2_check", fit.p2_check},
                {"residual", fit.residual}, {"distance", fit.distance}};
    j["bounds_computed"] = {{"rho_nu_bar", computed.rho_nu_bar},
                            {"rho_omega_bar", computed.rho_omega_bar},
                            {"phi", computed.phi},
                            {"mu", computed.mu}};
    j["bounds_published"] = {{"rho_nu_bar", published.rho_nu_bar},
                             {"rho_omega_bar", published.rho_omega_bar},
                             {"mu_phi", mu_phi_published}};
    j["gain_condition"] = {{"psi", psi},
                           {"gamma", gamma},
                           {"k_min_published_bounds",
                            gain_bound(rho_nu_published, rho_omega_published, mu_phi_published,
                                       psi, gamma)},
                           {"k_min_computed_bounds", k_min(computed, psi, gamma)}};
    return j;
}

} // namespace pitchsim
