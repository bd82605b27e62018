#pragma once

// Umbrella header for the full-load pitch-control simulator and design kit.

#include "pitchsim/actuator.hpp"
#include "pitchsim/baseline.hpp"
#include "pitchsim/ctrl_high.hpp"
#include "pitchsim/ctrl_low.hpp"
#include "pitchsim/design.hpp"
#include "pitchsim/errors.hpp"
#include "pitchsim/fault.hpp"
#include "pitchsim/metrics.hpp"
#include "pitchsim/plant.hpp"
#include "pitchsim/report.hpp"
#include "pitchsim/rng.hpp"
#include "pitchsim/rotor.hpp"
#include "pitchsim/saturation.hpp"
#include "pitchsim/scenario.hpp"
#include "pitchsim/simulate.hpp"
#include "pitchsim/svg.hpp"
#include "pitchsim/toml.hpp"
#include "pitchsim/trace.hpp"
#include "pitchsim/wind.hpp"
