#include "bcr/benefit.hpp"

#include <algorithm>
#include <cmath>

#include "bcr/error.hpp"

namespace bcr {

UtilityResponseCurve::UtilityResponseCurve(std::string attribute, std::vector<Point> points)
    : attribute_(std::move(attribute)), points_(std::move(points)) {
  if (points_.size() < 2) {
    throw Error(ErrorCode::InvalidModel, "utility curve for '" + attribute_ + "' needs at least two points");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto [value, utility] = points_[i];
    if (!std::isfinite(value) || !(utility >= 0.0 && utility <= 100.0)) {
      throw Error(ErrorCode::InvalidModel, "utility curve for '" + attribute_ + "' has a point outside [0,100]");
    }
    if (i > 0 && !(value > points_[i - 1].first)) {
      throw Error(ErrorCode::InvalidModel, "utility curve for '" + attribute_ + "' is not strictly ascending");
    }
  }
}

double UtilityResponseCurve::operator()(double value) const {
  if (value <= points_.front().first) return points_.front().second;
  if (value >= points_.back().first) return points_.back().second;
  auto hi = std::upper_bound(points_.begin(), points_.end(), value,
                             [](double v, const Point& p) { return v < p.first; });
  auto lo = std::prev(hi);
  if (value == lo->first) return lo->second;
  const double t = (value - lo->first) / (hi->first - lo->first);
  return lo->second + t * (hi->second - lo->second);
}

double eval_utility_curve(const UtilityResponseCurve& curve, double value) { return curve(value); }

void validate_goals(std::span<const AdaptationGoal> goals) {
  double total = 0.0;
  for (const auto& g : goals) {
    if (!(g.weight >= 0.0)) throw Error(ErrorCode::InvalidModel, "goal '" + g.attribute() + "' has a negative weight");
    total += g.weight;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(ErrorCode::InvalidModel, "goal weights sum to " + std::to_string(total) + ", expected 1");
  }
}

namespace {

double lookup(const QualityMap& map, const std::string& attribute, const char* what) {
  auto it = map.find(attribute);
  if (it == map.end()) {
    throw Error(ErrorCode::MissingAttribute, std::string(what) + " has no value for '" + attribute + "'");
  }
  return it->second;
}

}  // namespace

double estimated_benefit(const QualityMap& option_utilities, const QualityMap& current_utilities,
                         std::span<const AdaptationGoal> goals) {
  double eb = 0.0;
  for (const auto& goal : goals) {
    const double u_option = lookup(option_utilities, goal.attribute(), "option");
    const double u_current = lookup(current_utilities, goal.attribute(), "current configuration");
    eb += (u_option - u_current) * goal.weight;
  }
  return eb;
}

QualityMap utilities_for(const QualityMap& qualities, std::span<const AdaptationGoal> goals) {
  QualityMap out;
  for (const auto& goal : goals) {
    out[goal.attribute()] = goal.curve(lookup(qualities, goal.attribute(), "quality estimate"));
  }
  return out;
}

bool violates_goals(const QualityMap& utilities, std::span<const AdaptationGoal> goals) {
  return std::any_of(goals.begin(), goals.end(), [&](const AdaptationGoal& g) {
    return g.floor && lookup(utilities, g.attribute(), "current configuration") < *g.floor;
  });
}

BenefitEstimate estimate_benefit(std::string option_id, QualityMap option_qualities, QualityMap option_utilities,
                                 const QualityMap& current_utilities, std::span<const AdaptationGoal> goals) {
  BenefitEstimate out;
  out.option_id = std::move(option_id);
  out.estimated_benefit = estimated_benefit(option_utilities, current_utilities, goals);
  out.per_attribute_value = std::move(option_qualities);
  out.per_attribute_utility = std::move(option_utilities);
  return out;
}

QualityMap estimate_option_qualities(const Configuration& option, const WorkflowModel& workflow,
                                     const ServiceCatalog& catalog, const UncertaintyState& uncertainty,
                                     const SimulationParams& params) {
  const auto result = monte_carlo_estimate(workflow, catalog, option, uncertainty, params);
  return {{std::string(kFailureRate), result.failure_rate_percent},
          {std::string(kResourceUsage), result.mean_resource_usage}};
}

}  // namespace bcr
