#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "pitchsim/errors.hpp"
#include "pitchsim/trace.hpp"

#include "json.hpp"

namespace pitchsim {

inline double rms(const std::vector<double>& y, std::size_t lo, std::size_t hi) {
    if (hi <= lo) throw std::invalid_argument("rms: empty range");
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += y[i] * y[i];
    return std::sqrt(acc / static_cast<double>(hi - lo));
}

inline double rms(const std::vector<double>& y) { return rms(y, 0, y.size()); }

// Trapezoidal integral of y over the trace grid.
inline double trapezoid(const std::vector<double>& y, double dt) {
    if (y.size() < 2) return 0.0;
    double acc = 0.5 * (y.front() + y.back());
    for (std::size_t i = 1; i + 1 < y.size(); ++i) acc += y[i];
    return acc * dt;
}

// Per-run error metrics; relative percentages appear when a reference trace
// is supplied (reference := 100%).
struct MetricsReport {
    double rms_total = 0.0;          // RMS of the speed error over the run
    double rms_fault_window = 0.0;   // RMS over [window_lo, window_hi]
    double max_abs_err = 0.0;
    double pitch_activity = 0.0;     // mean over blades of integral |theta_dot| dt [rad]
    double dissipation_margin = 0.0;
    double window_lo = 150.0, window_hi = 250.0;
    bool has_reference = false;
    double rel_rms_total = 0.0;        // percent of reference
    double rel_rms_fault_window = 0.0; // percent of reference
};

// Least upper slack of the dissipation inequality along the trace:
// min over t1 of V(0) + integral_0^t1 supply - V(t1). Nonnegative within
// quadrature tolerance certifies the trajectory dissipative.
inline double dissipation_margin(const SimTrace& tr) {
    if (tr.size() < 2) throw std::invalid_argument("dissipation_margin: trace too short");
    double run = 0.0;
    double margin = tr.v_high[0] - tr.v_high[0]; // t1 = t0 term, zero
    for (std::size_t i = 1; i < tr.size(); ++i) {
        run += 0.5 * tr.dt * (tr.supply[i - 1] + tr.supply[i]);
        margin = std::min(margin, tr.v_high[0] + run - tr.v_high[i]);
    }
    return margin;
}

inline MetricsReport metrics(const SimTrace& tr, const SimTrace* reference = nullptr,
                             double window_lo = 150.0, double window_hi = 250.0) {
    if (tr.size() < 2) throw std::invalid_argument("metrics: trace too short");
    if (reference) {
        if (reference->size() != tr.size() || reference->dt != tr.dt)
            throw std::invalid_argument("metrics: reference trace grid mismatch");
    }
    MetricsReport m;
    m.window_lo = window_lo;
    m.window_hi = window_hi;
    auto idx = [&](double tv) {
        const auto i = static_cast<std::size_t>(std::llround(tv / tr.dt));
        return std::min(i, tr.size() - 1);
    };
    const std::size_t lo = idx(window_lo), hi = idx(window_hi) + 1;
    m.rms_total = rms(tr.omega_err);
    m.rms_fault_window = rms(tr.omega_err, lo, hi);
    for (double e : tr.omega_err) m.max_abs_err = std::max(m.max_abs_err, std::abs(e));
    for (int j = 0; j < 3; ++j) {
        std::vector<double> absrate(tr.size());
        for (std::size_t i = 0; i < tr.size(); ++i) absrate[i] = std::abs(tr.theta_dot[j][i]);
        m.pitch_activity += trapezoid(absrate, tr.dt) / 3.0;
    }
    m.dissipation_margin = dissipation_margin(tr);
    if (reference) {
        m.has_reference = true;
        m.rel_rms_total = 100.0 * m.rms_total / rms(reference->omega_err);
        m.rel_rms_fault_window = 100.0 * m.rms_fault_window / rms(reference->omega_err, lo, hi);
    }
    return m;
}

inline nlohmann::json metrics_json(const MetricsReport& m) {
    nlohmann::json j{
        {"rms_total", m.rms_total},
        {"rms_fault_window", m.rms_fault_window},
        {"max_abs_err", m.max_abs_err},
        {"pitch_activity", m.pitch_activity},
        {"dissipation_margin", m.dissipation_margin},
        {"fault_window", {m.window_lo, m.window_hi}},
    };
    if (m.has_reference) {
        j["rel_rms_total_pct"] = m.rel_rms_total;
        j["rel_rms_fault_window_pct"] = m.rel_rms_fault_window;
    }
    return j;
}

} // namespace pitchsim
