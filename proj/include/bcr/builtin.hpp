#pragma once

#include "bcr/scenario.hpp"

namespace bcr {

/// Default e-health utility curves.
UtilityResponseCurve ehealth_failure_curve();
UtilityResponseCurve ehealth_resource_curve();

/// E-health assistance system with three providers offering every role, the
/// calibrated workflow, a tier-rated health risk and a 27-option cartesian space.
ScenarioSpec ehealth_default();

/// The two-option worked example: current Cc, options C1 and C2, utilities
/// and health risk levels fixed per option.
ScenarioSpec ehealth_worked();

/// Table-driven IoT network: six (power, schedule) configurations, current C2.
ScenarioSpec iot_network();

}  // namespace bcr
