#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <random>

#include "pitchsim/design.hpp"
#include "pitchsim/report.hpp"

using namespace pitchsim;

namespace {
const TurbineParams kTp{};
const OperatingPoint kOp{};

// feasible p3 for given (p1, p2) from the rated-equilibrium constraint
double solve_p3(double p1, double p2) {
    const double s0 = kOp.nu0 / kOp.omega_r0;
    const double A = kTp.kappa * kOp.nu0 * kOp.nu0 * kOp.nu0 / (kTp.inertia * kOp.omega_r0);
    const double B = A / 3.0;
    const double C = kTp.rated_power / (kTp.inertia * kOp.omega_r0);
    const double c2 = std::exp(-p2 * s0);
    return (A * (s0 - p1) - C / c2) / (B * 3.0 * kOp.theta0 * kOp.theta0);
}
} // namespace

TEST_CASE("a feasible reference is its own fit") {
    const FitResult fr = fit_p(kTp.p1, kTp.p2, solve_p3(kTp.p1, kTp.p2), kOp, kTp);
    CHECK(fr.distance < 1e-9);
    CHECK(fr.p1 == Catch::Approx(kTp.p1).epsilon(1e-9));
    CHECK(std::abs(fr.residual) < 1e-9);
}

TEST_CASE("fit from the published degree-convention coefficients") {
    const FitResult fr = fit_p(5.4148, 0.0682, 0.029, kOp, kTp);
    CHECK(std::abs(fr.residual) < 1e-9);
    CHECK(fr.p1 > 0.0);
    CHECK(fr.p3 > 0.0);
    CHECK(fr.p2_check > 0.0);
    CHECK(fr.p2_check < 1.0);
    // the fitted model must make the operating point an equilibrium
    TurbineParams fitted = kTp;
    fitted.p1 = fr.p1;
    fitted.p2 = fr.p2;
    fitted.p3 = fr.p3;
    const std::array<double, 3> th = {kOp.theta0, kOp.theta0, kOp.theta0};
    CHECK(std::abs(rotor_accel(fitted, kOp.nu0, kOp.omega_r0, th)) < 1e-9);
}

TEST_CASE("perturbing the reference inside the feasible surface keeps residual zero") {
    // move along the constraint line at fixed p2_check: direction (b, -a)
    const double s0 = kOp.nu0 / kOp.omega_r0;
    const double A = kTp.kappa * kOp.nu0 * kOp.nu0 * kOp.nu0 / (kTp.inertia * kOp.omega_r0);
    const double b = -(A / 3.0) * 3.0 * kOp.theta0 * kOp.theta0, a = -A;
    (void)s0;
    const double p3f = solve_p3(kTp.p1, kTp.p2);
    for (double t : {-0.5, 0.2, 1.0}) {
        const FitResult fr = fit_p(kTp.p1 + t * b, kTp.p2, p3f - t * a, kOp, kTp);
        CHECK(std::abs(fr.residual) < 1e-9);
        CHECK(fr.distance < 1e-7);
    }
}

TEST_CASE("lattice over the feasible set brackets the fit objective") {
    const double p1r = 5.4148, p2r = 0.0682, p3r = 0.029;
    const FitResult fr = fit_p(p1r, p2r, p3r, kOp, kTp);
    const double q2c = std::exp(-p2r * kOp.nu0 / kOp.omega_r0);
    auto sweep = [&](double c2_lo, double c2_hi, double p1_lo, double p1_hi, int n) {
        double best = 1e300;
        for (int i = 0; i <= n; ++i) {
            const double c2 = c2_lo + (c2_hi - c2_lo) * i / n;
            if (c2 <= 0.0 || c2 >= 1.0) continue;
            const double p2 = -std::log(c2) * kOp.omega_r0 / kOp.nu0;
            for (int j = 0; j <= n; ++j) {
                const double p1 = p1_lo + (p1_hi - p1_lo) * j / n;
                const double p3 = solve_p3(p1, p2);
                if (p3 <= 0.0) continue;
                const double d1 = p1 - p1r, d2 = c2 - q2c, d3 = p3 - p3r;
                best = std::min(best, d1 * d1 + d2 * d2 + d3 * d3);
            }
        }
        return best;
    };
    const double global_best = sweep(1e-3, 0.999, p1r - 3.0, p1r + 3.0, 300);
    const double local_best =
        sweep(fr.p2_check - 1e-3, fr.p2_check + 1e-3, fr.p1 - 0.01, fr.p1 + 0.01, 600);
    CHECK(fr.objective <= std::min(global_best, local_best) + 1e-6);
    CHECK(local_best <= fr.objective + 1e-6);
}

TEST_CASE("infeasible references are rejected") {
    CHECK_THROWS_AS(fit_p(-30.0, 0.25, -5.0, kOp, kTp), config_error);
}

TEST_CASE("degenerate single-point envelope returns the pointwise partials") {
    OperatingPoint pt = kOp;
    pt.nu_lo = pt.nu_hi = pt.nu0;
    pt.omega_lo = pt.omega_hi = pt.omega_r0;
    pt.theta_lo = pt.theta_hi = pt.theta0;
    pt.conic_theta_lo = pt.conic_theta_hi = pt.theta0;
    const RobustnessBounds b = bound_rho(pt, kTp, 1);
    const std::array<double, 3> th = {pt.theta0, pt.theta0, pt.theta0};
    CHECK(b.rho_nu_bar ==
          Catch::Approx(std::abs(rotor_accel_dnu(kTp, pt.nu0, pt.omega_r0, th))));
    CHECK(b.rho_omega_bar ==
          Catch::Approx(std::abs(rotor_accel_domega(kTp, pt.nu0, pt.omega_r0, th))));
    CHECK(b.phi == Catch::Approx(2.0 * rotor_g2(kTp, pt.nu0, pt.omega_r0) * 3.0 * pt.theta0));
}

TEST_CASE("full envelope confirms the published conic floor") {
    const RobustnessBounds b = bound_rho(kOp, kTp, 64);
    CHECK(b.phi >= 0.15);
    CHECK(b.mu == 1.0);
}

TEST_CASE("bounds are grid-converged to within two percent") {
    const RobustnessBounds a = bound_rho(kOp, kTp, 64);
    const RobustnessBounds b = bound_rho(kOp, kTp, 128);
    CHECK(std::abs(a.rho_nu_bar - b.rho_nu_bar) < 0.02 * b.rho_nu_bar);
    CHECK(std::abs(a.rho_omega_bar - b.rho_omega_bar) < 0.02 * b.rho_omega_bar);
    CHECK(std::abs(a.phi - b.phi) < 0.02 * b.phi);
}

TEST_CASE("bounds dominate the partials across the grid") {
    const RobustnessBounds b = bound_rho(kOp, kTp, 64);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> pick(0, 63);
    for (int i = 0; i < 200; ++i) {
        const double nu = kOp.nu_lo + (kOp.nu_hi - kOp.nu_lo) * pick(rng) / 63.0;
        const double w = kOp.omega_lo + (kOp.omega_hi - kOp.omega_lo) * pick(rng) / 63.0;
        const double th = kOp.theta_lo + (kOp.theta_hi - kOp.theta_lo) * pick(rng) / 63.0;
        const std::array<double, 3> tv = {th, th, th};
        CHECK(std::abs(rotor_accel_dnu(kTp, nu, w, tv)) <= b.rho_nu_bar + 1e-12);
        CHECK(std::abs(rotor_accel_domega(kTp, nu, w, tv)) <= b.rho_omega_bar + 1e-12);
        const double thc =
            kOp.conic_theta_lo + (kOp.conic_theta_hi - kOp.conic_theta_lo) * pick(rng) / 63.0;
        CHECK(2.0 * rotor_g2(kTp, nu, w) * 3.0 * thc >= b.phi - 1e-12);
    }
}

TEST_CASE("an envelope touching the speed floor is singular") {
    OperatingPoint bad = kOp;
    bad.omega_lo = 0.04;
    CHECK_THROWS_AS(bound_rho(bad, kTp), config_error);
}

TEST_CASE("design k_min delegates to the controller-side bound") {
    RobustnessBounds b;
    b.rho_nu_bar = 1.0;
    b.rho_omega_bar = 1.5;
    b.phi = 0.15;
    b.mu = 1.0;
    CHECK(k_min(b, 0.5, 0.25) == gain_bound(1.0, 1.5, 0.15, 0.5, 0.25));
}

TEST_CASE("design report carries both gain-rule routes") {
    const FitResult fr = fit_p(kTp.p1, kTp.p2, kTp.p3, kOp, kTp);
    const RobustnessBounds b = bound_rho(kOp, kTp, 16);
    const auto j = design_report(kTp, kOp, fr, b, 0.5, 0.25);
    CHECK(j["gain_condition"]["k_min_published_bounds"].get<double>() ==
          Catch::Approx(54.17).margin(0.01));
    CHECK(j["bounds_computed"]["phi"].get<double>() == Catch::Approx(b.phi));
    CHECK(j["fit"]["residual"].get<double>() == Catch::Approx(fr.residual).margin(1e-12));
}
