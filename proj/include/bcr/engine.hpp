#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bcr/benefit.hpp"
#include "bcr/cost.hpp"
#include "bcr/decision.hpp"
#include "bcr/desirability.hpp"
#include "bcr/risk.hpp"
#include "bcr/scenario.hpp"
#include "bcr/tradeoff.hpp"

namespace bcr {

struct EvaluationOptions {
  SimulationParams simulation;
  /// Restrict the adaptation space to these ids (empty = whole space).
  std::vector<std::string> option_filter;
  /// Estimate options on worker threads; the result is identical either way.
  bool parallel = false;
};

struct OptionEvaluation {
  Configuration configuration;
  BenefitEstimate benefit;
  CostEstimate cost;
  DesirabilityEstimate desirability;
  RiskEstimate risk;
  std::optional<double> score;  // absent when vetoed

  const std::string& id() const { return configuration.id; }
};

struct Evaluation {
  Configuration current;
  QualityMap current_qualities;
  QualityMap current_utilities;
  std::optional<RiskEstimate> current_risk;  // only when the current configuration competes as baseline
  std::vector<OptionEvaluation> options;  // space order, non-adaptations skipped
  Decision decision;

  const OptionEvaluation* find(std::string_view id) const;
  const OptionEvaluation* selected() const;  // null when no adaptation was chosen
};

/// Qualities of `option` under `uncertainty`: observed values on the current
/// configuration, a table lookup, or a Monte Carlo estimate.
QualityMap estimate_qualities(const ScenarioSpec& spec, const Configuration& option,
                              const UncertaintyState& uncertainty, const SimulationParams& params);

/// Utilities per goal attribute, taken from the scenario's overrides when it
/// fixes them for this configuration id.
QualityMap option_utilities(const ScenarioSpec& spec, const std::string& id, const QualityMap& qualities);

/// Analyze and Plan for one situation: EB, EC, ED and ER of every option
/// that differs from `current`, veto, then EBCR selection.
Evaluation evaluate(const ScenarioSpec& spec, const Configuration& current, const UncertaintyState& uncertainty,
                    const EvaluationOptions& options = {});

/// Evaluation of the scenario's own initial configuration and uncertainty.
Evaluation evaluate(const ScenarioSpec& spec, const EvaluationOptions& options = {});

/// (EB, EC, ED, ER) of every non-vetoed option, ready for a tradeoff sweep.
std::vector<SweepOption> sweep_options(const Evaluation& ev);

}  // namespace bcr
