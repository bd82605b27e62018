#pragma once

#include <algorithm>
#include <stdexcept>

namespace pitchsim {

// Clamp x to [lo, hi].
inline double sat(double x, double lo, double hi) {
    if (lo > hi) throw std::invalid_argument("sat: invalid bounds, lo > hi");
    return std::min(std::max(x, lo), hi);
}

} // namespace pitchsim
