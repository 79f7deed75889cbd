#include "bcr/decision.hpp"

#include <algorithm>
#include <cmath>

#include "bcr/error.hpp"

namespace bcr {

void DecisionPolicy::validate() const {
  auto in_unit = [](double w) { return w >= 0.0 && w <= 1.0; };
  if (!in_unit(w_desirability) || !in_unit(w_risk)) {
    throw Error(ErrorCode::InvalidModel, "decision weights must lie in [0,1]");
  }
  if (std::abs(w_desirability + w_risk - 1.0) > 1e-9) {
    throw Error(ErrorCode::InvalidModel, "decision weights must sum to 1");
  }
  if (benefit_scaling.kind == ScalingFunction::Kind::ThresholdMultiplier && !(benefit_scaling.multiplier > 0.0)) {
    throw Error(ErrorCode::InvalidModel, "benefit scaling multiplier must be positive");
  }
  if (cost_scaling.kind == ScalingFunction::Kind::ThresholdMultiplier && !(cost_scaling.multiplier > 0.0)) {
    throw Error(ErrorCode::InvalidModel, "cost scaling multiplier must be positive");
  }
}

double ebcr_score(double ed, double er, const DecisionPolicy& policy) {
  return ed * policy.w_desirability - er * policy.w_risk;
}

Decision select(const Configuration& current, std::span<const Candidate> triples, const DecisionPolicy& policy,
                std::optional<double> current_risk) {
  std::vector<RationaleRow> rows;
  rows.reserve(triples.size() + 1);
  for (const auto& t : triples) {
    rows.push_back({t.option_id, t.desirability, t.risk, ebcr_score(t.desirability, t.risk, policy), false});
  }
  if (rows.empty()) throw Error(ErrorCode::NoViableOption, "no adaptation option left to select from");
  if (policy.include_current_as_baseline) {
    if (!current_risk) throw Error(ErrorCode::InvalidModel, "baseline selection needs the current risk");
    rows.push_back({current.id, 0.0, *current_risk, ebcr_score(0.0, *current_risk, policy), true});
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.option_id < b.option_id; });

  Decision out;
  const RationaleRow* best = nullptr;
  for (const auto& r : rows) {
    if (!out.scores.emplace(r.option_id, r.score).second) {
      throw Error(ErrorCode::InvalidModel, "option '" + r.option_id + "' appears twice");
    }
    if (!best || r.score > best->score) best = &r;
  }
  out.selected = best->option_id;
  out.no_adaptation = best->baseline;
  out.rationale = std::move(rows);
  return out;
}

}  // namespace bcr
