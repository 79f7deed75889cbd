#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bcr/scenario.hpp"

namespace bcr {

struct AnchorResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;  // observed values
};

/// The reference anchors of the e-health worked example, evaluated end to end
/// through the engine: benefit, cost, desirability, risk, decision, both
/// tradeoff crossovers and the utility curves. `worked` must provide the
/// options C1 and C2 and the current configuration Cc.
std::vector<AnchorResult> run_reference_anchors(const ScenarioSpec& worked);

/// "PASS id: description (detail)" per anchor; returns true when all passed.
bool print_anchor_results(const std::vector<AnchorResult>& results, std::ostream& out);

}  // namespace bcr
