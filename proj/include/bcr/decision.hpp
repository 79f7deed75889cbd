#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bcr/desirability.hpp"
#include "bcr/domain.hpp"

namespace bcr {

struct DecisionPolicy {
  DesirabilityMethod method = DesirabilityMethod::ValueForCost;
  ScalingFunction benefit_scaling;
  ScalingFunction cost_scaling;
  double w_desirability = 0.5;
  double w_risk = 0.5;
  bool include_current_as_baseline = false;

  /// Weights in [0,1] summing to 1.
  void validate() const;

  bool operator==(const DecisionPolicy&) const = default;
};

/// One (option, ED, ER) triple handed to select.
struct Candidate {
  std::string option_id;
  double desirability = 0.0;
  double risk = 0.0;
};

struct RationaleRow {
  std::string option_id;
  double desirability = 0.0;
  double risk = 0.0;
  double score = 0.0;
  bool baseline = false;
};

struct Decision {
  std::string selected;
  bool no_adaptation = false;  // the current configuration won as baseline
  std::map<std::string, double> scores;
  std::vector<RationaleRow> rationale;  // ordered by option id
};

/// ed * w_desirability - er * w_risk
double ebcr_score(double ed, double er, const DecisionPolicy& policy);

/// Scores every triple and returns the argmax, smaller option id on ties.
/// With include_current_as_baseline the current configuration competes with
/// desirability 0 and `current_risk`; picking it means no adaptation.
Decision select(const Configuration& current, std::span<const Candidate> triples, const DecisionPolicy& policy,
                std::optional<double> current_risk = std::nullopt);

}  // namespace bcr
