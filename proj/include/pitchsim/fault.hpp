#pragma once

#include "pitchsim/actuator.hpp"
#include "pitchsim/errors.hpp"

namespace pitchsim {

// Incipient-fault schedule: factors ramp linearly from (1,1) to the full
// depths over [ramp_start, full_start], hold through full_end, and ramp back
// to (1,1) by clear_time. Outside the window the actuator is healthy.
struct FaultSchedule {
    bool enabled = false;
    double ramp_start = 150.0;
    double full_start = 180.0;
    double full_end = 220.0;
    double clear_time = 250.0;
    double delta_full = 0.5;
    double rho_full = 0.8;

    void validate() const {
        if (!enabled) return;
        if (!(ramp_start < full_start && full_start < full_end && full_end < clear_time))
            throw config_error("fault schedule times must be strictly increasing");
        if (delta_full <= 0.0 || delta_full > 1.0 || rho_full <= 0.0 || rho_full > 1.0)
            throw config_error("fault depths must lie in (0,1]");
    }
};

inline FaultFactors fault_factors(const FaultSchedule& s, double t) {
    if (!s.enabled || t <= s.ramp_start || t >= s.clear_time) return {1.0, 1.0};
    double lam;
    if (t < s.full_start)
        lam = (t - s.ramp_start) / (s.full_start - s.ramp_start);
    else if (t <= s.full_end)
        lam = 1.0;
    else
        lam = (s.clear_time - t) / (s.clear_time - s.full_end);
    return {1.0 + (s.delta_full - 1.0) * lam, 1.0 + (s.rho_full - 1.0) * lam};
}

} // namespace pitchsim
