#pragma once

#include <array>
#include <cmath>
#include <string>

#include "pitchsim/baseline.hpp"
#include "pitchsim/ctrl_high.hpp"
#include "pitchsim/ctrl_low.hpp"
#include "pitchsim/fault.hpp"
#include "pitchsim/plant.hpp"
#include "pitchsim/rng.hpp"
#include "pitchsim/scenario.hpp"
#include "pitchsim/trace.hpp"
#include "pitchsim/wind.hpp"

namespace pitchsim {

// Execute one scenario. The plant advances at dt with RK4; the high level
// refreshes the pitch demand every control_every steps; the low level (or the
// PI baseline) issues actuator references every plant step. Deterministic for
// a fixed scenario, including the wind and noise seeds.
inline SimTrace run_scenario(const Scenario& sc) {
    sc.validate();
    const WindSeries wind = build_wind(sc.wind, sc.duration);
    const auto n = static_cast<std::size_t>(std::llround(sc.duration / sc.dt));

    PlantState plant;
    plant.omega_r = sc.op.omega_r0;
    for (auto& a : plant.act) a = ActuatorState{sc.op.theta0, 0.0};

    HighLevelState high;
    std::array<LowLevelState, 3> low{};
    PiState pi = pi_init_hold(sc.baseline, sc.op.theta0);
    GaussianRng noise(sc.noise_seed);

    std::array<double, 3> theta_d = {sc.op.theta0, sc.op.theta0, sc.op.theta0};
    double err_prev = 0.0;
    double pi_err_prev = 0.0;
    bool have_prev = false;

    SimTrace tr;
    tr.dt = sc.dt;
    tr.reserve(n + 1);

    for (std::size_t i = 0; i <= n; ++i) {
        const double t = static_cast<double>(i) * sc.dt;
        const double nu = wind.sample(t);
        const FaultFactors f = fault_factors(sc.fault, t);

        const double omega_meas =
            plant.omega_r + (sc.noise_std > 0.0 ? sc.noise_std * noise() : 0.0);
        const double err = omega_meas - sc.op.omega_r0;
        if (have_prev) integrate_error(high, err_prev, err, sc.dt, sc.high.i_max);
        err_prev = err;
        have_prev = true;
        const double sig = filtered_error(omega_meas, sc.op.omega_r0, high, sc.high.psi);

        std::array<double, 3> theta_r;
        if (sc.controller == ControllerKind::Proposed) {
            if (i % static_cast<std::size_t>(sc.control_every) == 0)
                theta_d = high_level_control(sig, sc.high);
            for (int j = 0; j < 3; ++j) {
                const auto& a = plant.act[j];
                const double z = filtered_tracking_error(a.theta, a.theta_dot, theta_d[j],
                                                         sc.low.zeta0, sc.low.omega_n0);
                theta_r[j] = low_level_control(a.theta, a.theta_dot, z, low[j], sc.low);
                adapt(low[j], z, a.theta_dot, sc.low.alpha, sc.dt, sc.low.eta_max);
            }
        } else {
            if (i % static_cast<std::size_t>(sc.control_every) == 0) {
                const double period = sc.dt * sc.control_every;
                theta_d = pi_control(omega_meas, sc.op.omega_r0, plant.act[0].theta, pi,
                                     sc.baseline, pi_err_prev, period);
                pi_err_prev = err;
            }
            theta_r = theta_d;
        }

        // monitors
        const double eta = eta_true(f.delta, f.rho, sc.low.zeta0, sc.low.omega_n0);
        double v_low_sum = 0.0;
        for (int j = 0; j < 3; ++j) {
            const auto& a = plant.act[j];
            const double z = filtered_tracking_error(a.theta, a.theta_dot, theta_d[j],
                                                     sc.low.zeta0, sc.low.omega_n0);
            v_low_sum += low_level_energy(z, low[j].eta_hat, eta, f.delta, sc.low);
        }
        const double nu_err = nu - sc.op.nu0;

        tr.t.push_back(t);
        tr.nu.push_back(nu);
        tr.omega_r.push_back(plant.omega_r);
        tr.omega_err.push_back(plant.omega_r - sc.op.omega_r0);
        tr.sigma.push_back(sig);
        for (int j = 0; j < 3; ++j) {
            tr.theta[j].push_back(plant.act[j].theta);
            tr.theta_dot[j].push_back(plant.act[j].theta_dot);
            tr.theta_r[j].push_back(theta_r[j]);
            tr.eta_hat[j].push_back(low[j].eta_hat);
        }
        tr.delta.push_back(f.delta);
        tr.rho.push_back(f.rho);
        tr.v_high.push_back(high_level_energy(sig, high, sc.high.psi));
        tr.v_low.push_back(v_low_sum);
        tr.supply.push_back(sc.high.gamma * sc.high.gamma * nu_err * nu_err - sig * sig);

        if (i < n) {
            try {
                plant = plant_step(sc.turbine, sc.actuator, plant, nu, theta_r, f, sc.dt);
            } catch (const numerics_error& e) {
                throw numerics_error(std::string(e.what()) + " at t=" + std::to_string(t) + " s");
            }
        }
    }
    return tr;
}

} // namespace pitchsim
