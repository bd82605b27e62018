#pragma once

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "pitchsim/pitchsim.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace pitchsim::cli {

inline int simulate_cmd(const std::string& scenario_path, const std::string& trace_out,
                        const std::string& metrics_out, bool quiet) {
    Scenario sc = load_scenario_file(scenario_path);
    if (!trace_out.empty()) sc.trace_path = trace_out;
    if (!metrics_out.empty()) sc.metrics_path = metrics_out;
    const SimTrace tr = run_scenario(sc);
    const MetricsReport m = metrics(tr, nullptr, sc.fault.ramp_start, sc.fault.clear_time);
    if (!sc.trace_path.empty()) {
        std::string comment = "scenario=" + scenario_path +
                              " wind_seed=" + std::to_string(sc.wind.seed) +
                              " dt=" + std::to_string(sc.dt);
        write_trace_csv(tr, sc.trace_path, comment,
                        static_cast<std::size_t>(sc.trace_every));
    }
    if (!sc.metrics_path.empty()) {
        nlohmann::json j = metrics_json(m);
        j["scenario"] = {{"path", scenario_path},
                         {"controller",
                          sc.controller == ControllerKind::Proposed ? "proposed" : "baseline"},
                         {"wind_seed", sc.wind.seed},
                         {"noise_seed", sc.noise_seed},
                         {"dt", sc.dt},
                         {"duration", sc.duration},
                         {"fault_enabled", sc.fault.enabled},
                         {"delta_full", sc.fault.delta_full},
                         {"rho_full", sc.fault.rho_full}};
        std::ofstream out(sc.metrics_path);
        if (!out) throw config_error("cannot write metrics JSON: " + sc.metrics_path);
        out << j.dump(2) << "\n";
    }
    if (!quiet) {
        std::printf("simulated %.1f s (%zu samples)\n", sc.duration, tr.size());
        std::printf("rms omega_err          : %.6e rad/s\n", m.rms_total);
        std::printf("rms omega_err [%g,%g] : %.6e rad/s\n", m.window_lo, m.window_hi,
                    m.rms_fault_window);
        std::printf("max |omega_err|        : %.6e rad/s\n", m.max_abs_err);
        std::printf("pitch activity         : %.4f rad\n", m.pitch_activity);
        std::printf("dissipation margin     : %+.6e\n", m.dissipation_margin);
    }
    return 0;
}

inline int compare_cmd(const std::string& ref_path, const std::string& other_path,
                       const std::string& out_path) {
    const Scenario ref_sc = load_scenario_file(ref_path);
    const Scenario other_sc = load_scenario_file(other_path);
    const SimTrace ref = run_scenario(ref_sc);
    const SimTrace other = run_scenario(other_sc);
    const MetricsReport mr =
        metrics(ref, &ref, ref_sc.fault.ramp_start, ref_sc.fault.clear_time);
    const MetricsReport mo =
        metrics(other, &ref, ref_sc.fault.ramp_start, ref_sc.fault.clear_time);

    std::printf("relative RMS of rotor-speed error (reference = 100%%)\n");
    std::printf("%-28s %14s %18s\n", "scenario", "whole run", "fault window");
    std::printf("%-28s %13.2f%% %17.2f%%\n", ref_path.c_str(), mr.rel_rms_total,
                mr.rel_rms_fault_window);
    std::printf("%-28s %13.2f%% %17.2f%%\n", other_path.c_str(), mo.rel_rms_total,
                mo.rel_rms_fault_window);
    std::printf("note: magnitudes depend on the reduced plant model; "
                "only orderings are meaningful across models.\n");
    if (!out_path.empty()) {
        nlohmann::json j;
        j["reference"] = {{"path", ref_path}, {"metrics", metrics_json(mr)}};
        j["compared"] = {{"path", other_path}, {"metrics", metrics_json(mo)}};
        std::ofstream out(out_path);
        if (!out) throw config_error("cannot write comparison JSON: " + out_path);
        out << j.dump(2) << "\n";
    }
    return 0;
}

struct DesignArgs {
    std::string config;
    std::string out;
    double p1 = 5.4148, p2 = 0.25, p3 = 59.60501704163281;
    double rho_nu = 1.0, rho_omega = 1.5, mu_phi = 0.15;
    double psi = 0.5, gamma = 0.25;
    int grid = 64;
};

inline void load_design_context(const DesignArgs& a, TurbineParams& tp, OperatingPoint& op) {
    if (!a.config.empty()) {
        const Scenario sc = load_scenario_file(a.config);
        tp = sc.turbine;
        op = sc.op;
    }
}

inline int design_fit_cmd(const DesignArgs& a) {
    TurbineParams tp;
    OperatingPoint op;
    load_design_context(a, tp, op);
    const FitResult fr = fit_p(a.p1, a.p2, a.p3, op, tp);
    std::printf("fitted coefficients (radian pitch convention)\n");
    std::printf("  p1 = %.12g\n  p2 = %.12g\n  p3 = %.12g\n", fr.p1, fr.p2, fr.p3);
    std::printf("  equilibrium residual = %.3e rad/s^2\n", fr.residual);
    std::printf("  distance to reference = %.6e\n", fr.distance);
    if (!a.out.empty()) {
        TurbineParams fitted = tp;
        fitted.p1 = fr.p1; fitted.p2 = fr.p2; fitted.p3 = fr.p3;
        const RobustnessBounds b = bound_rho(op, fitted, a.grid);
        std::ofstream out(a.out);
        if (!out) throw config_error("cannot write design report: " + a.out);
        out << design_report(fitted, op, fr, b, a.psi, a.gamma, a.rho_nu, a.rho_omega, a.mu_phi)
                   .dump(2)
            << "\n";
    }
    return 0;
}

inline int design_bounds_cmd(const DesignArgs& a) {
    TurbineParams tp;
    OperatingPoint op;
    load_design_context(a, tp, op);
    const RobustnessBounds b = bound_rho(op, tp, a.grid);
    std::printf("envelope bounds (grid %d^3)\n", a.grid);
    std::printf("  rho_nu_bar    = %.6f   (published value used for the gain rule: %.3f)\n",
                b.rho_nu_bar, a.rho_nu);
    std::printf("  rho_omega_bar = %.6f   (published value: %.3f)\n", b.rho_omega_bar,
                a.rho_omega);
    std::printf("  phi           = %.6f   (published mu*phi: %.3f)\n", b.phi, a.mu_phi);
    std::printf("  k_min (computed bounds)  = %.4f\n", k_min(b, a.psi, a.gamma));
    std::printf("  k_min (published bounds) = %.4f\n",
                gain_bound(a.rho_nu, a.rho_omega, a.mu_phi, a.psi, a.gamma));
    if (!a.out.empty()) {
        const FitResult fr = fit_p(tp.p1, tp.p2, tp.p3, op, tp);
        std::ofstream out(a.out);
        if (!out) throw config_error("cannot write design report: " + a.out);
        out << design_report(tp, op, fr, b, a.psi, a.gamma, a.rho_nu, a.rho_omega, a.mu_phi)
                   .dump(2)
            << "\n";
    }
    return 0;
}

inline int design_gain_cmd(const DesignArgs& a) {
    const double k = gain_bound(a.rho_nu, a.rho_omega, a.mu_phi, a.psi, a.gamma);
    std::printf("k_min = %.4f  (rho_nu=%.4g rho_omega=%.4g mu_phi=%.4g psi=%.4g gamma=%.4g)\n",
                k, a.rho_nu, a.rho_omega, a.mu_phi, a.psi, a.gamma);
    return 0;
}

inline int wind_gen_cmd(double mean, double ti, std::uint64_t seed, double duration, double tc,
                        double sample_dt, const std::string& out_path) {
    WindProfile p;
    p.kind = WindKind::Stochastic;
    p.mean = mean;
    p.turbulence_intensity = ti;
    p.seed = seed;
    p.correlation_time = tc;
    p.sample_dt = sample_dt;
    const WindSeries s = build_wind(p, duration);
    write_wind_csv(s, p, out_path);
    std::printf("wrote %zu samples to %s\n", s.raw_values().size(), out_path.c_str());
    return 0;
}

inline int plot_cmd(const std::string& csv_path, const std::string& out_dir) {
    auto [names, cols] = read_csv_columns(csv_path);
    if (names.empty() || names[0] != "t")
        throw config_error("plot expects a CSV whose first column is t");
    std::filesystem::create_directories(out_dir);
    int written = 0;
    for (std::size_t c = 1; c < names.size(); ++c) {
        if (cols[c].empty()) continue;
        const std::string path = out_dir + "/" + names[c] + ".svg";
        write_svg_plot(path, names[c], cols[0], cols[c]);
        ++written;
    }
    std::printf("wrote %d plots to %s/\n", written, out_dir.c_str());
    return 0;
}

inline int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Wind-turbine full-load pitch control: simulator and design kit"};
    app.require_subcommand(1);

    // simulate
    std::string scenario_path, trace_out, metrics_out;
    bool quiet = false;
    auto* sim = app.add_subcommand("simulate", "run a scenario file");
    sim->add_option("scenario", scenario_path, "scenario TOML file")->required();
    sim->add_option("--trace-out", trace_out, "override trace CSV path");
    sim->add_option("--metrics-out", metrics_out, "override metrics JSON path");
    sim->add_flag("--quiet", quiet, "suppress the summary");

    // compare
    std::string cmp_a, cmp_b, cmp_out;
    auto* cmp = app.add_subcommand("compare", "relative-RMS table of two scenarios");
    cmp->add_option("reference", cmp_a, "reference scenario (100%)")->required();
    cmp->add_option("other", cmp_b, "compared scenario")->required();
    cmp->add_option("--out", cmp_out, "write the table as JSON");

    // design
    DesignArgs da;
    auto* des = app.add_subcommand("design", "controller-design toolbox");
    des->require_subcommand(1);
    auto add_common = [&](CLI::App* c) {
        c->add_option("--config", da.config, "scenario TOML supplying turbine/operating point");
        c->add_option("--out", da.out, "write a design report JSON");
        c->add_option("--psi", da.psi, "filter gain");
        c->add_option("--gamma", da.gamma, "attenuation level");
    };
    auto* fit = des->add_subcommand("fit-p", "fit aerodynamic coefficients to the equilibrium");
    add_common(fit);
    fit->add_option("--p1", da.p1, "reference p1");
    fit->add_option("--p2", da.p2, "reference p2");
    fit->add_option("--p3", da.p3, "reference p3");
    fit->add_option("--grid", da.grid, "bound grid for the report");
    auto* bnd = des->add_subcommand("bounds", "robustness bounds over the envelope");
    add_common(bnd);
    bnd->add_option("--grid", da.grid, "grid points per axis");
    bnd->add_option("--rho-nu", da.rho_nu, "published wind-sensitivity bound");
    bnd->add_option("--rho-omega", da.rho_omega, "published speed-sensitivity bound");
    bnd->add_option("--mu-phi", da.mu_phi, "published conic constant");
    auto* gb = des->add_subcommand("gain-bound", "sufficient control-gain bound");
    gb->add_option("--rho-nu", da.rho_nu, "wind-sensitivity bound");
    gb->add_option("--rho-omega", da.rho_omega, "speed-sensitivity bound");
    gb->add_option("--mu-phi", da.mu_phi, "conic constant times sector constant");
    gb->add_option("--psi", da.psi, "filter gain");
    gb->add_option("--gamma", da.gamma, "attenuation level");

    // wind gen
    double w_mean = 22.0, w_ti = 0.20, w_dur = 600.0, w_tc = 10.0, w_sdt = 0.25;
    std::uint64_t w_seed = 1;
    std::string w_out = "wind.csv";
    auto* wind = app.add_subcommand("wind", "wind-series utilities");
    wind->require_subcommand(1);
    auto* wgen = wind->add_subcommand("gen", "generate a stochastic wind series CSV");
    wgen->add_option("--mean", w_mean, "mean speed [m/s]");
    wgen->add_option("--ti", w_ti, "turbulence intensity");
    wgen->add_option("--seed", w_seed, "generator seed");
    wgen->add_option("--duration", w_dur, "series length [s]");
    wgen->add_option("--tc", w_tc, "correlation time [s]");
    wgen->add_option("--sample-dt", w_sdt, "generator grid [s]");
    wgen->add_option("--out", w_out, "output CSV path");

    // plot
    std::string plot_csv, plot_dir = "plots";
    auto* plt = app.add_subcommand("plot", "SVG line plots per trace column");
    plt->add_option("trace", plot_csv, "trace CSV")->required();
    plt->add_option("--out-dir", plot_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed()) return simulate_cmd(scenario_path, trace_out, metrics_out, quiet);
        if (cmp->parsed()) return compare_cmd(cmp_a, cmp_b, cmp_out);
        if (des->parsed()) {
            if (fit->parsed()) return design_fit_cmd(da);
            if (bnd->parsed()) return design_bounds_cmd(da);
            if (gb->parsed()) return design_gain_cmd(da);
        }
        if (wind->parsed() && wgen->parsed())
            return wind_gen_cmd(w_mean, w_ti, w_seed, w_dur, w_tc, w_sdt, w_out);
        if (plt->parsed()) return plot_cmd(plot_csv, plot_dir);
    } catch (const numerics_error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const config_error& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::out_of_range& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    }
    return 2;
}

} // namespace pitchsim::cli
