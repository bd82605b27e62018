#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pitchsim/errors.hpp"
#include "pitchsim/rng.hpp"

namespace pitchsim {

enum class WindKind { StepSequence, Stochastic, File };

// Wind-speed signal description for the full-load region. Emitted samples are
// clamped to [clamp_lo, clamp_hi].
struct WindProfile {
    WindKind kind = WindKind::Stochastic;

    // step-sequence: zero-order hold over (time, speed) points
    std::vector<std::pair<double, double>> steps;

    // stochastic: Ornstein-Uhlenbeck around the mean. The process is generated
    // on its own grid (sample_dt) and interpolated linearly; sample_dt models
    // the bandwidth of rotor-effective wind (point turbulence averaged over
    // the rotor disk carries no usable power at shorter scales).
    double mean = 22.0;
    double turbulence_intensity = 0.20;
    double correlation_time = 10.0; // [s]
    double sample_dt = 0.25;        // generator grid [s]
    std::uint64_t seed = 1;

    // file: CSV time/speed series
    std::string file_path;

    double clamp_lo = 11.4;
    double clamp_hi = 25.0;

    void validate() const {
        if (clamp_lo >= clamp_hi) throw config_error("wind clamp bounds out of order");
        switch (kind) {
        case WindKind::StepSequence:
            if (steps.empty()) throw config_error("step wind profile needs at least one point");
            for (std::size_t i = 1; i < steps.size(); ++i)
                if (steps[i].first <= steps[i - 1].first)
                    throw config_error("step wind times must be strictly increasing");
            break;
        case WindKind::Stochastic:
            if (mean <= 0.0) throw config_error("wind mean must be positive");
            if (turbulence_intensity < 0.0) throw config_error("turbulence intensity must be >= 0");
            if (correlation_time <= 0.0) throw config_error("correlation time must be positive");
            if (sample_dt <= 0.0) throw config_error("wind sample_dt must be positive");
            break;
        case WindKind::File:
            if (file_path.empty()) throw config_error("file wind profile needs a path");
            break;
        }
    }
};

// Realized wind series on a uniform grid; raw (unclamped) values kept for
// statistics, emission clamps to the envelope.
class WindSeries {
public:
    WindSeries(std::vector<double> raw, double grid_dt, double clamp_lo, double clamp_hi,
               bool hold = false)
        : raw_(std::move(raw)), dt_(grid_dt), lo_(clamp_lo), hi_(clamp_hi), hold_(hold) {}

    // Clamped value at time t; linear interpolation on the grid (zero-order
    // hold for step profiles). t beyond the series is an error.
    double sample(double t) const {
        return std::min(std::max(raw(t), lo_), hi_);
    }

    // Unclamped value at time t.
    double raw(double t) const {
        if (t < 0.0) throw std::invalid_argument("wind sample time must be >= 0");
        const double x = t / dt_;
        const auto i = static_cast<std::size_t>(x);
        if (i >= raw_.size() - 1) {
            if (x <= static_cast<double>(raw_.size() - 1) + 1e-9) return raw_.back();
            throw std::out_of_range("wind sample time beyond end of series");
        }
        if (hold_) return raw_[i];
        const double f = x - static_cast<double>(i);
        return raw_[i] * (1.0 - f) + raw_[i + 1] * f;
    }

    const std::vector<double>& raw_values() const { return raw_; }
    double grid_dt() const { return dt_; }
    double duration() const { return dt_ * static_cast<double>(raw_.size() - 1); }

private:
    std::vector<double> raw_;
    double dt_;
    double lo_, hi_;
    bool hold_;
};

// Build the realized series for a profile covering [0, duration].
inline WindSeries build_wind(const WindProfile& p, double duration) {
    p.validate();
    if (duration <= 0.0) throw config_error("wind duration must be positive");

    if (p.kind == WindKind::Stochastic) {
        const auto n = static_cast<std::size_t>(std::ceil(duration / p.sample_dt)) + 1;
        std::vector<double> v(n + 1);
        v[0] = p.mean;
        const double sig = p.turbulence_intensity * p.mean;
        const double a = std::exp(-p.sample_dt / p.correlation_time);
        const double b = sig * std::sqrt(1.0 - a * a);
        GaussianRng rng(p.seed);
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            v[i + 1] = p.mean + (v[i] - p.mean) * a + b * rng();
        return WindSeries(std::move(v), p.sample_dt, p.clamp_lo, p.clamp_hi);
    }

    if (p.kind == WindKind::StepSequence) {
        // dense zero-order-hold grid at 10 ms keeps sample() trivial
        const double grid = 0.01;
        const auto n = static_cast<std::size_t>(std::ceil(duration / grid)) + 1;
        std::vector<double> v(n + 1);
        std::size_t k = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const double t = static_cast<double>(i) * grid;
            while (k + 1 < p.steps.size() && t >= p.steps[k + 1].first) ++k;
            v[i] = (t < p.steps.front().first) ? p.steps.front().second : p.steps[k].second;
        }
        return WindSeries(std::move(v), grid, p.clamp_lo, p.clamp_hi, /*hold=*/true);
    }

    // file profile
    std::ifstream in(p.file_path);
    if (!in) throw config_error("cannot open wind file: " + p.file_path);
    std::string line;
    std::vector<double> ts, vs;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) { // mandatory "t,v" header
            if (line.rfind("t,", 0) != 0)
                throw config_error("wind CSV must start with a 't,v' header line");
            header_seen = true;
            continue;
        }
        std::istringstream ss(line);
        double t, v;
        char comma;
        if (!(ss >> t >> comma >> v) || comma != ',')
            throw config_error("malformed wind CSV row: " + line);
        ts.push_back(t);
        vs.push_back(v);
    }
    if (!header_seen || ts.size() < 2) throw config_error("wind CSV needs a header and >= 2 rows");
    const double grid = ts[1] - ts[0];
    if (grid <= 0.0) throw config_error("wind CSV times must increase");
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (std::abs(ts[i] - ts[i - 1] - grid) > 1e-9 * std::max(1.0, grid))
            throw config_error("wind CSV requires a uniform time grid");
    if (ts.back() < duration - 1e-9)
        throw std::out_of_range("wind CSV ends before the requested duration");
    return WindSeries(std::move(vs), grid, p.clamp_lo, p.clamp_hi);
}

// Two-column CSV with mandatory header; seed and clamp recorded as comments.
inline void write_wind_csv(const WindSeries& s, const WindProfile& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw config_error("cannot write wind CSV: " + path);
    out << "# pitchsim wind series";
    if (p.kind == WindKind::Stochastic)
        out << " seed=" << p.seed << " mean=" << p.mean << " ti=" << p.turbulence_intensity
            << " tc=" << p.correlation_time;
    out << "\n";
    out << "t,v\n";
    char buf[64];
    const auto& v = s.raw_values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double t = static_cast<double>(i) * s.grid_dt();
        const double val = std::min(std::max(v[i], p.clamp_lo), p.clamp_hi);
        std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", t, val);
        out << buf;
    }
}

} // namespace pitchsim
