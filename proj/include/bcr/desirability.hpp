#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace bcr {

/// Maps an estimate onto the scale used for comparison. The threshold
/// multiplier computes T + (v - T) * x for every v, on both sides of T.
struct ScalingFunction {
  enum class Kind { Identity, ThresholdMultiplier };

  Kind kind = Kind::Identity;
  double threshold = 0.0;
  double multiplier = 1.0;

  static ScalingFunction identity() { return {}; }
  static ScalingFunction threshold_multiplier(double threshold, double multiplier);

  double operator()(double v) const;
  bool operator==(const ScalingFunction&) const = default;
};

double apply_scaling(const ScalingFunction& f, double v);

enum class DesirabilityMethod { ValueForCost, NetBenefit };

std::string_view to_string(DesirabilityMethod method);
std::optional<DesirabilityMethod> parse_desirability_method(std::string_view text);

struct DesirabilityEstimate {
  std::string option_id;
  DesirabilityMethod method = DesirabilityMethod::ValueForCost;
  double estimated_desirability = 0.0;
};

/// ValueForCost: sb(eb) / sc(ec), throwing ZeroScaledCost when sc(ec) == 0.
/// NetBenefit: sb(eb) - sc(ec).
DesirabilityEstimate desirability(double eb, double ec, const ScalingFunction& sb, const ScalingFunction& sc,
                                  DesirabilityMethod method, std::string option_id = {});

}  // namespace bcr
