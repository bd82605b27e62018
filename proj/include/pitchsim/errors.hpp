#pragma once

#include <stdexcept>
#include <string>

namespace pitchsim {

// Bad configuration, infeasible setup, malformed input files. CLI exit code 2.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical breakdown during integration (singularity, divergence). CLI exit code 3.
struct numerics_error : std::runtime_error {
    explicit numerics_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pitchsim
