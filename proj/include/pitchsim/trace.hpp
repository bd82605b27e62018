#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pitchsim/errors.hpp"

namespace pitchsim {

// Time-indexed record of one simulation. Column order is fixed (see README)
// so repeated runs with identical configuration produce identical bytes.
struct SimTrace {
    double dt = 0.0;
    std::vector<double> t;
    std::vector<double> nu;          // wind speed [m/s]
    std::vector<double> omega_r;     // rotor speed [rad/s]
    std::vector<double> omega_err;   // rotor speed error [rad/s]
    std::vector<double> sigma;       // filtered error
    std::array<std::vector<double>, 3> theta;
    std::array<std::vector<double>, 3> theta_dot;
    std::array<std::vector<double>, 3> theta_r;
    std::array<std::vector<double>, 3> eta_hat;
    std::vector<double> delta;
    std::vector<double> rho;
    std::vector<double> v_high;      // high-level storage function
    std::vector<double> v_low;       // summed low-level Lyapunov function
    std::vector<double> supply;      // gamma^2 nu_err^2 - sigma^2

    std::size_t size() const { return t.size(); }

    void reserve(std::size_t n) {
        t.reserve(n); nu.reserve(n); omega_r.reserve(n); omega_err.reserve(n);
        sigma.reserve(n);
        for (int j = 0; j < 3; ++j) {
            theta[j].reserve(n); theta_dot[j].reserve(n);
            theta_r[j].reserve(n); eta_hat[j].reserve(n);
        }
        delta.reserve(n); rho.reserve(n);
        v_high.reserve(n); v_low.reserve(n); supply.reserve(n);
    }
};

inline const char* kTraceHeader =
    "t,nu,omega_r,omega_err,sigma,"
    "theta_1,theta_2,theta_3,theta_dot_1,theta_dot_2,theta_dot_3,"
    "theta_r_1,theta_r_2,theta_r_3,eta_hat_1,eta_hat_2,eta_hat_3,"
    "delta,rho,v_high,v_low,supply";

// stride > 1 decimates the exported rows; monitors and metrics always use the
// full-rate trace held in memory.
inline void write_trace_csv(const SimTrace& tr, const std::string& path,
                            const std::string& comment = "", std::size_t stride = 1) {
    if (stride < 1) throw std::invalid_argument("trace stride must be >= 1");
    std::ofstream out(path);
    if (!out) throw config_error("cannot write trace CSV: " + path);
    if (!comment.empty()) out << "# " << comment << "\n";
    out << kTraceHeader << "\n";
    char buf[48];
    auto put = [&](double v, char sep) {
        std::snprintf(buf, sizeof buf, "%.12g%c", v, sep);
        out << buf;
    };
    for (std::size_t i = 0; i < tr.size(); i += stride) {
        put(tr.t[i], ','); put(tr.nu[i], ','); put(tr.omega_r[i], ',');
        put(tr.omega_err[i], ','); put(tr.sigma[i], ',');
        for (int j = 0; j < 3; ++j) put(tr.theta[j][i], ',');
        for (int j = 0; j < 3; ++j) put(tr.theta_dot[j][i], ',');
        for (int j = 0; j < 3; ++j) put(tr.theta_r[j][i], ',');
        for (int j = 0; j < 3; ++j) put(tr.eta_hat[j][i], ',');
        put(tr.delta[i], ','); put(tr.rho[i], ',');
        put(tr.v_high[i], ','); put(tr.v_low[i], ',');
        put(tr.supply[i], '\n');
    }
}

// Generic CSV reader for plotting: returns column names and column vectors.
inline std::pair<std::vector<std::string>, std::vector<std::vector<double>>>
read_csv_columns(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open CSV: " + path);
    std::string line;
    std::vector<std::string> names;
    std::vector<std::vector<double>> cols;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string cell;
        if (names.empty()) {
            while (std::getline(ss, cell, ',')) names.push_back(cell);
            cols.resize(names.size());
            continue;
        }
        std::size_t c = 0;
        while (std::getline(ss, cell, ',')) {
            if (c >= cols.size()) throw config_error("ragged CSV row in " + path);
            cols[c++].push_back(std::strtod(cell.c_str(), nullptr));
        }
        if (c != cols.size()) throw config_error("ragged CSV row in " + path);
    }
    if (names.empty()) throw config_error("CSV has no header: " + path);
    return {names, cols};
}

} // namespace pitchsim
