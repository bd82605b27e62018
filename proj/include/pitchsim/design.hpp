#pragma once

#include <array>
#include <cmath>
#include <string>

#include "pitchsim/ctrl_high.hpp"
#include "pitchsim/errors.hpp"
#include "pitchsim/rotor.hpp"

namespace pitchsim {

// Operating point plus the surrounding evaluation envelope.
struct OperatingPoint {
    double omega_r0 = 1.267;   // [rad/s]
    double nu0 = 22.0;         // [m/s]
    double theta0 = 0.3480186528476693; // collective pitch [rad]

    // envelope for the robustness bounds (collective pitch)
    double nu_lo = 11.4, nu_hi = 25.0;
    double omega_lo = 1.0, omega_hi = 1.5;
    double theta_lo = 0.0, theta_hi = 1.5707963267948966;

    // pitch range for the conic-alignment minimum. The input-gain alignment
    // vanishes as pitch approaches zero, so it is evaluated where the loop
    // needs shedding authority: at and above the operating pitch.
    double conic_theta_lo = 0.3480186528476693;
    double conic_theta_hi = 1.5707963267948966;

    void validate(double omega_floor) const {
        if (!(nu_lo <= nu_hi && omega_lo <= omega_hi && theta_lo <= theta_hi))
            throw config_error("envelope ranges out of order");
        if (omega_lo <= omega_floor)
            throw config_error("singular envelope: rotor-speed range reaches the model floor");
        if (nu_lo < 11.4 - 1e-12 || nu_hi > 25.0 + 1e-12)
            throw config_error("envelope wind range must stay within [11.4, 25] m/s");
        if (!(nu_lo <= nu0 && nu0 <= nu_hi && omega_lo <= omega_r0 && omega_r0 <= omega_hi))
            throw config_error("operating point must lie inside the envelope");
    }
};

struct RobustnessBounds {
    double rho_nu_bar = 0.0;   // max |df/dnu| over the envelope
    double rho_omega_bar = 0.0; // max |df/domega| over the envelope
    double phi = 0.0;          // min conic alignment rho_theta . rho0
    double mu = 1.0;           // saturation sector constant
};

struct FitResult {
    double p1 = 0.0, p2 = 0.0, p3 = 0.0;
    double p2_check = 0.0;     // exp(-p2 nu0/omega_r0), the fit variable
    double residual = 0.0;     // equilibrium constraint residual
    double distance = 0.0;     // || p - p_ref || in (p1, p2_check, p3) space
    double objective = 0.0;    // distance squared
};

namespace detail_fit {

// Constraint line in (p1, p3) for fixed c2 = exp(-p2 s0):
//   -A p1 - B||theta0||^2 p3 = C/c2 - A s0.
struct ConstraintGeom {
    double A, B2, C, s0;
    double a, b; // line coefficients
    double c(double c2) const { return C / c2 - A * s0; }
};

inline ConstraintGeom geometry(const TurbineParams& tp, const OperatingPoint& op) {
    ConstraintGeom g{};
    g.s0 = op.nu0 / op.omega_r0;
    g.A = tp.kappa * op.nu0 * op.nu0 * op.nu0 / (tp.inertia * op.omega_r0);
    g.B2 = g.A / 3.0 * 3.0 * op.theta0 * op.theta0; // B * ||theta0||^2
    g.C = tp.rated_power / (tp.inertia * op.omega_r0);
    g.a = -g.A;
    g.b = -g.B2;
    return g;
}

// Squared distance from (q1, q3) to the line plus the c2 deviation.
inline double objective_at(const ConstraintGeom& g, double c2, double q1, double q2c, double q3) {
    const double r = g.c(c2) - (g.a * q1 + g.b * q3);
    const double d2 = r * r / (g.a * g.a + g.b * g.b);
    const double dc = c2 - q2c;
    return d2 + dc * dc;
}

} // namespace detail_fit

// Minimum-norm fit of (p1, exp(-p2 s0), p3) onto the rated-equilibrium
// constraint. One-dimensional scan plus golden-section refinement over the
// exponential variable; (p1, p3) projected exactly onto the constraint line.
inline FitResult fit_p(double p1_ref, double p2_ref, double p3_ref, const OperatingPoint& op,
                       const TurbineParams& tp) {
    if (!std::isfinite(p1_ref) || !std::isfinite(p2_ref) || !std::isfinite(p3_ref))
        throw config_error("fit reference coefficients must be finite");
    const auto g = detail_fit::geometry(tp, op);
    const double q2c = std::exp(-p2_ref * g.s0);

    // bracket the minimizer with a coarse scan over c2 in (0,1)
    const int n_scan = 4000;
    const double lo_edge = 1e-9, hi_edge = 1.0 - 1e-9;
    double best = lo_edge, best_val = detail_fit::objective_at(g, lo_edge, p1_ref, q2c, p3_ref);
    for (int i = 1; i <= n_scan; ++i) {
        const double c2 = lo_edge + (hi_edge - lo_edge) * static_cast<double>(i) / n_scan;
        const double val = detail_fit::objective_at(g, c2, p1_ref, q2c, p3_ref);
        if (val < best_val) { best_val = val; best = c2; }
    }
    double lo = std::max(lo_edge, best - (hi_edge - lo_edge) / n_scan);
    double hi = std::min(hi_edge, best + (hi_edge - lo_edge) / n_scan);

    // golden-section refinement to ~1e-12 in c2
    const double gr = 0.6180339887498949;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = detail_fit::objective_at(g, x1, p1_ref, q2c, p3_ref);
    double f2 = detail_fit::objective_at(g, x2, p1_ref, q2c, p3_ref);
    while (hi - lo > 1e-13) {
        if (f1 < f2) {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = detail_fit::objective_at(g, x1, p1_ref, q2c, p3_ref);
        } else {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = detail_fit::objective_at(g, x2, p1_ref, q2c, p3_ref);
        }
    }
    const double c2 = 0.5 * (lo + hi);

    // exact projection of (p1_ref, p3_ref) onto the constraint line at c2
    const double r = g.c(c2) - (g.a * p1_ref + g.b * p3_ref);
    const double s = r / (g.a * g.a + g.b * g.b);
    FitResult out;
    out.p1 = p1_ref + s * g.a;
    out.p3 = p3_ref + s * g.b;
    out.p2_check = c2;
    out.p2 = -std::log(c2) * op.omega_r0 / op.nu0;
    out.objective = detail_fit::objective_at(g, c2, p1_ref, q2c, p3_ref);
    out.distance = std::sqrt(out.objective);

    if (out.p1 <= 0.0 || out.p3 <= 0.0 || !(c2 > 0.0 && c2 < 1.0))
        throw config_error("infeasible fit: no positive coefficients on the constraint");

    TurbineParams fitted = tp;
    fitted.p1 = out.p1;
    fitted.p2 = out.p2;
    fitted.p3 = out.p3;
    const std::array<double, 3> th0 = {op.theta0, op.theta0, op.theta0};
    out.residual = rotor_accel(fitted, op.nu0, op.omega_r0, th0);
    return out;
}

// Grid-evaluate the analytic partials over the envelope; maxima give the
// robustness bounds, the conic minimum is taken over the conic pitch range
// with direction rho0 = [-1,-1,-1].
inline RobustnessBounds bound_rho(const OperatingPoint& op, const TurbineParams& tp,
                                  int grid_n = 64) {
    op.validate(tp.omega_floor);
    if (grid_n < 1) throw config_error("bound grid must have at least one point");
    RobustnessBounds b;
    b.mu = 1.0;
    double phi = 1e300;
    for (int iv = 0; iv < grid_n; ++iv) {
        const double nu = grid_n == 1 ? op.nu_lo
                                      : op.nu_lo + (op.nu_hi - op.nu_lo) * iv / (grid_n - 1.0);
        for (int iw = 0; iw < grid_n; ++iw) {
            const double w = grid_n == 1
                                 ? op.omega_lo
                                 : op.omega_lo + (op.omega_hi - op.omega_lo) * iw / (grid_n - 1.0);
            const double g2 = rotor_g2(tp, nu, w);
            for (int it = 0; it < grid_n; ++it) {
                const double th = grid_n == 1 ? op.theta_lo
                                              : op.theta_lo +
                                                    (op.theta_hi - op.theta_lo) * it / (grid_n - 1.0);
                const std::array<double, 3> tv = {th, th, th};
                b.rho_nu_bar = std::max(b.rho_nu_bar, std::abs(rotor_accel_dnu(tp, nu, w, tv)));
                b.rho_omega_bar =
                    std::max(b.rho_omega_bar, std::abs(rotor_accel_domega(tp, nu, w, tv)));
                const double thc = grid_n == 1
                                       ? op.conic_theta_lo
                                       : op.conic_theta_lo + (op.conic_theta_hi - op.conic_theta_lo) *
                                                                 it / (grid_n - 1.0);
                phi = std::min(phi, 2.0 * g2 * 3.0 * thc); // rho_theta . [-1,-1,-1]
            }
        }
    }
    b.phi = phi;
    if (b.phi <= 0.0) throw config_error("degenerate conic: alignment not positive over envelope");
    return b;
}

// Design-workflow entry point; same arithmetic as the controller-side bound.
inline double k_min(const RobustnessBounds& b, double psi, double gamma) {
    return gain_bound(b.rho_nu_bar, b.rho_omega_bar, b.mu * b.phi, psi, gamma);
}

} // namespace pitchsim
