#include "bcr/desirability.hpp"

#include <cmath>

#include "bcr/error.hpp"

namespace bcr {

ScalingFunction ScalingFunction::threshold_multiplier(double threshold, double multiplier) {
  if (!(multiplier > 0.0) || !std::isfinite(threshold)) {
    throw Error(ErrorCode::InvalidModel, "threshold multiplier needs a finite threshold and x > 0");
  }
  return {Kind::ThresholdMultiplier, threshold, multiplier};
}

double ScalingFunction::operator()(double v) const {
  if (kind == Kind::Identity) return v;
  return threshold + (v - threshold) * multiplier;
}

double apply_scaling(const ScalingFunction& f, double v) { return f(v); }

std::string_view to_string(DesirabilityMethod method) {
  return method == DesirabilityMethod::ValueForCost ? "ValueForCost" : "NetBenefit";
}

std::optional<DesirabilityMethod> parse_desirability_method(std::string_view text) {
  if (text == "ValueForCost") return DesirabilityMethod::ValueForCost;
  if (text == "NetBenefit") return DesirabilityMethod::NetBenefit;
  return std::nullopt;
}

DesirabilityEstimate desirability(double eb, double ec, const ScalingFunction& sb, const ScalingFunction& sc,
                                  DesirabilityMethod method, std::string option_id) {
  DesirabilityEstimate out{std::move(option_id), method, 0.0};
  const double benefit = sb(eb);
  const double cost = sc(ec);
  if (method == DesirabilityMethod::NetBenefit) {
    out.estimated_desirability = benefit - cost;
    return out;
  }
  if (cost == 0.0) {
    throw Error(ErrorCode::ZeroScaledCost, "scaled cost of '" + out.option_id + "' is zero");
  }
  out.estimated_desirability = benefit / cost;
  return out;
}

}  // namespace bcr
