#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bcr/domain.hpp"
#include "bcr/workflow.hpp"

namespace bcr {

/// Stakeholder preference for one quality attribute: piecewise-linear through
/// (value, utility%) points, clamped to the endpoint utilities outside the range.
class UtilityResponseCurve {
 public:
  using Point = std::pair<double, double>;

  UtilityResponseCurve() = default;
  /// Throws InvalidModel unless there are >= 2 points, strictly ascending in
  /// value, with utilities in [0, 100].
  UtilityResponseCurve(std::string attribute, std::vector<Point> points);

  const std::string& attribute() const { return attribute_; }
  const std::vector<Point>& points() const { return points_; }

  double operator()(double value) const;

  bool operator==(const UtilityResponseCurve&) const = default;

 private:
  std::string attribute_;
  std::vector<Point> points_;
};

double eval_utility_curve(const UtilityResponseCurve& curve, double value);

struct AdaptationGoal {
  UtilityResponseCurve curve;
  double weight = 0.0;
  /// Utility below which the current configuration counts as violating the goal.
  std::optional<double> floor;

  const std::string& attribute() const { return curve.attribute(); }
  bool operator==(const AdaptationGoal&) const = default;
};

/// Throws InvalidModel when a weight is negative or the weights do not sum to 1.
void validate_goals(std::span<const AdaptationGoal> goals);

struct BenefitEstimate {
  std::string option_id;
  QualityMap per_attribute_value;
  QualityMap per_attribute_utility;
  double estimated_benefit = 0.0;
};

/// Sum over goals of (U_option - U_current) * weight.
double estimated_benefit(const QualityMap& option_utilities, const QualityMap& current_utilities,
                         std::span<const AdaptationGoal> goals);

/// Utility of every goal attribute; throws MissingAttribute if a value is absent.
QualityMap utilities_for(const QualityMap& qualities, std::span<const AdaptationGoal> goals);

/// True when some goal with a floor has a utility strictly below it.
bool violates_goals(const QualityMap& utilities, std::span<const AdaptationGoal> goals);

BenefitEstimate estimate_benefit(std::string option_id, QualityMap option_qualities, QualityMap option_utilities,
                                 const QualityMap& current_utilities, std::span<const AdaptationGoal> goals);

/// Failure rate (%) and mean resource usage of `option`, estimated by Monte
/// Carlo simulation of the workflow.
QualityMap estimate_option_qualities(const Configuration& option, const WorkflowModel& workflow,
                                     const ServiceCatalog& catalog, const UncertaintyState& uncertainty,
                                     const SimulationParams& params);

}  // namespace bcr
