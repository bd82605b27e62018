#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "pitchsim/actuator.hpp"
#include "pitchsim/baseline.hpp"
#include "pitchsim/ctrl_high.hpp"
#include "pitchsim/ctrl_low.hpp"
#include "pitchsim/design.hpp"
#include "pitchsim/errors.hpp"
#include "pitchsim/fault.hpp"
#include "pitchsim/rotor.hpp"
#include "pitchsim/toml.hpp"
#include "pitchsim/wind.hpp"

#include "json.hpp"

namespace pitchsim {

enum class ControllerKind { Proposed, Baseline };

// Complete simulation setup, loadable from a TOML scenario file. Angles enter
// the file in degrees and are converted here; everything downstream is radians.
struct Scenario {
    TurbineParams turbine;
    ActuatorParams actuator;
    OperatingPoint op;
    HighLevelGains high;
    LowLevelGains low;
    PiGains baseline;
    WindProfile wind;
    FaultSchedule fault;
    ControllerKind controller = ControllerKind::Proposed;

    double duration = 600.0;   // [s]
    double dt = 0.002;         // plant step [s]
    int control_every = 1;     // high-level update period in plant steps
    double noise_std = 0.0;    // rotor-speed measurement noise, 0 disables
    std::uint64_t noise_seed = 99;
    std::string trace_path;    // optional CSV output
    int trace_every = 1;       // CSV export decimation (rows, not monitors)
    std::string metrics_path;  // optional JSON output

    void validate() const {
        turbine.validate();
        actuator.validate();
        high.validate();
        low.validate();
        baseline.validate();
        wind.validate();
        fault.validate();
        op.validate(turbine.omega_floor);
        if (duration <= 0.0 || dt <= 0.0) throw config_error("duration and dt must be positive");
        if (control_every < 1) throw config_error("control_every must be >= 1");
        if (trace_every < 1) throw config_error("trace_every must be >= 1");
        if (noise_std < 0.0) throw config_error("noise std must be >= 0");
    }
};

namespace detail_scn {
constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
}

inline Scenario load_scenario(const toml::Table& t) {
    Scenario s;

    s.turbine.kappa = t.number_or("turbine.kappa", s.turbine.kappa);
    s.turbine.inertia = t.number_or("turbine.inertia", s.turbine.inertia);
    s.turbine.rated_power = t.number_or("turbine.rated_power", s.turbine.rated_power);
    s.turbine.p1 = t.number_or("turbine.p1", s.turbine.p1);
    s.turbine.p2 = t.number_or("turbine.p2", s.turbine.p2);
    s.turbine.p3 = t.number_or("turbine.p3", s.turbine.p3);
    s.turbine.theta_max =
        t.number_or("turbine.theta_max_deg", 90.0) * detail_scn::kDegToRad;
    s.turbine.omega_floor = t.number_or("turbine.omega_floor", s.turbine.omega_floor);
    if (t.has("turbine.design_report")) {
        // take the fitted aerodynamic coefficients from a design report JSON
        const std::string path = t.string("turbine.design_report");
        std::ifstream in(path);
        if (!in) throw config_error("cannot open design report: " + path);
        nlohmann::json j;
        try {
            in >> j;
            s.turbine.p1 = j.at("fit").at("p1").get<double>();
            s.turbine.p2 = j.at("fit").at("p2").get<double>();
            s.turbine.p3 = j.at("fit").at("p3").get<double>();
        } catch (const nlohmann::json::exception& e) {
            throw config_error("malformed design report " + path + ": " + e.what());
        }
    }
    s.op.omega_r0 = t.number_or("turbine.omega_r0", s.op.omega_r0);
    s.op.nu0 = t.number_or("turbine.nu0", s.op.nu0);
    s.op.theta0 = t.number_or("turbine.theta0_deg", 19.94) * detail_scn::kDegToRad;

    s.op.nu_lo = t.number_or("turbine.envelope_nu_lo", s.op.nu_lo);
    s.op.nu_hi = t.number_or("turbine.envelope_nu_hi", s.op.nu_hi);
    s.op.omega_lo = t.number_or("turbine.envelope_omega_lo", s.op.omega_lo);
    s.op.omega_hi = t.number_or("turbine.envelope_omega_hi", s.op.omega_hi);
    s.op.theta_lo = t.number_or("turbine.envelope_theta_lo_deg", 0.0) * detail_scn::kDegToRad;
    s.op.theta_hi = t.number_or("turbine.envelope_theta_hi_deg", 90.0) * detail_scn::kDegToRad;
    s.op.conic_theta_lo =
        t.number_or("turbine.conic_theta_lo_deg", 19.94) * detail_scn::kDegToRad;
    s.op.conic_theta_hi =
        t.number_or("turbine.conic_theta_hi_deg", 90.0) * detail_scn::kDegToRad;

    s.actuator.zeta0 = t.number_or("actuator.zeta0", s.actuator.zeta0);
    s.actuator.omega_n0 = t.number_or("actuator.omega_n0", s.actuator.omega_n0);
    s.actuator.rate_limit_enabled = t.boolean_or("actuator.rate_limit_enabled", false);
    s.actuator.rate_limit =
        t.number_or("actuator.rate_limit_deg_s", 8.0) * detail_scn::kDegToRad;

    s.high.k = t.number_or("gains.high.k", s.high.k);
    s.high.psi = t.number_or("gains.high.psi", s.high.psi);
    s.high.gamma = t.number_or("gains.high.gamma", s.high.gamma);
    s.high.i_max = t.number_or("gains.high.i_max", s.high.i_max);
    if (t.has("gains.high.rho0")) {
        const auto r = t.numbers("gains.high.rho0");
        if (r.size() != 3) throw config_error("gains.high.rho0 must have 3 entries");
        s.high.rho0 = {r[0], r[1], r[2]};
    }
    s.high.theta0 = s.op.theta0;
    s.high.theta_max = s.turbine.theta_max;

    s.low.k_theta = t.number_or("gains.low.k_theta", s.low.k_theta);
    s.low.alpha = t.number_or("gains.low.alpha", s.low.alpha);
    s.low.eta_max = t.number_or("gains.low.eta_max", s.low.eta_max);
    s.low.zeta0 = s.actuator.zeta0;
    s.low.omega_n0 = s.actuator.omega_n0;

    s.baseline.kp0 = t.number_or("baseline.kp0", s.baseline.kp0);
    s.baseline.ki0 = t.number_or("baseline.ki0", s.baseline.ki0);
    s.baseline.theta_k = t.number_or("baseline.theta_k", s.baseline.theta_k);
    s.baseline.theta_max = s.turbine.theta_max;

    const std::string kind = t.string_or("wind.kind", "stochastic");
    if (kind == "stochastic")
        s.wind.kind = WindKind::Stochastic;
    else if (kind == "steps")
        s.wind.kind = WindKind::StepSequence;
    else if (kind == "file")
        s.wind.kind = WindKind::File;
    else
        throw config_error("wind.kind must be stochastic, steps or file");
    s.wind.mean = t.number_or("wind.mean", s.wind.mean);
    s.wind.turbulence_intensity = t.number_or("wind.ti", s.wind.turbulence_intensity);
    s.wind.correlation_time = t.number_or("wind.correlation_time", s.wind.correlation_time);
    s.wind.sample_dt = t.number_or("wind.sample_dt", s.wind.sample_dt);
    s.wind.seed = static_cast<std::uint64_t>(t.number_or("wind.seed", 1.0));
    s.wind.clamp_lo = t.number_or("wind.clamp_lo", s.wind.clamp_lo);
    s.wind.clamp_hi = t.number_or("wind.clamp_hi", s.wind.clamp_hi);
    if (t.has("wind.steps")) s.wind.steps = t.pairs("wind.steps");
    s.wind.file_path = t.string_or("wind.file", "");

    s.fault.enabled = t.boolean_or("fault.enabled", false);
    s.fault.ramp_start = t.number_or("fault.ramp_start", s.fault.ramp_start);
    s.fault.full_start = t.number_or("fault.full_start", s.fault.full_start);
    s.fault.full_end = t.number_or("fault.full_end", s.fault.full_end);
    s.fault.clear_time = t.number_or("fault.clear_time", s.fault.clear_time);
    s.fault.delta_full = t.number_or("fault.delta_full", s.fault.delta_full);
    s.fault.rho_full = t.number_or("fault.rho_full", s.fault.rho_full);

    const std::string ctrl = t.string_or("sim.controller", "proposed");
    if (ctrl == "proposed")
        s.controller = ControllerKind::Proposed;
    else if (ctrl == "baseline")
        s.controller = ControllerKind::Baseline;
    else
        throw config_error("sim.controller must be proposed or baseline");
    s.duration = t.number_or("sim.duration", s.duration);
    s.dt = t.number_or("sim.dt", s.dt);
    s.control_every = static_cast<int>(t.number_or("sim.control_every", 1.0));
    s.noise_std = t.number_or("sim.noise_std", 0.0);
    s.noise_seed = static_cast<std::uint64_t>(t.number_or("sim.noise_seed", 99.0));
    s.trace_path = t.string_or("sim.trace_out", "");
    s.trace_every = static_cast<int>(t.number_or("sim.trace_every", 1.0));
    s.metrics_path = t.string_or("sim.metrics_out", "");

    s.validate();
    return s;
}

inline Scenario load_scenario_file(const std::string& path) {
    return load_scenario(toml::parse_file(path));
}

} // namespace pitchsim
