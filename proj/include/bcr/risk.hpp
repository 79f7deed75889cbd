#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bcr/domain.hpp"

namespace bcr {

struct RiskRating {
  double likelihood = 0.0;
  int consequence = 1;
  std::string likelihood_label;
  std::string consequence_label;

  bool operator==(const RiskRating&) const = default;
};

/// Rating per key (an SLA tier name, or an uncertainty level) for one risk attribute.
struct RiskMetricTable {
  std::map<std::string, RiskRating> rows;

  const RiskRating& rate(std::string_view key) const;  // throws UnratedTier
  bool operator==(const RiskMetricTable&) const = default;
};

/// Likelihood/consequence of one service, rated by its provider's SLA tier.
std::pair<double, int> rate_service(const ConcreteService& service, const ServiceProvider& provider,
                                    const RiskMetricTable& table);

/// Consequence/likelihood grid of risk levels. Row index is likelihood
/// (1..n), column index is consequence (1..m); both 1-based in the API.
class RiskMatrix {
 public:
  RiskMatrix() = default;
  explicit RiskMatrix(std::vector<std::vector<int>> cells);

  /// 4x4 grid spanning levels I..V.
  static RiskMatrix default_4x4();
  /// 3x3 grid spanning levels I..III.
  static RiskMatrix default_3x3();

  int likelihood_levels() const { return static_cast<int>(cells_.size()); }
  int consequence_levels() const { return cells_.empty() ? 0 : static_cast<int>(cells_.front().size()); }
  const std::vector<std::vector<int>>& cells() const { return cells_; }

  int lookup(int likelihood, int consequence) const;  // throws OutOfAxis

  bool operator==(const RiskMatrix&) const = default;

 private:
  std::vector<std::vector<int>> cells_;
};

int matrix_lookup(const RiskMatrix& matrix, int likelihood, int consequence);

enum class Rounding { HalfUp, HalfDown, HalfEven };

std::string_view to_string(Rounding rounding);
std::optional<Rounding> parse_rounding(std::string_view text);

/// round(sum), clamped to [1, axis_levels].
int combine_likelihood(std::span<const double> ratings, int axis_levels, Rounding rounding = Rounding::HalfUp);
/// max(ratings).
int combine_consequence(std::span<const int> ratings);

struct ConsequenceBand {
  std::optional<double> max;  // inclusive upper bound; none = catch-all
  int consequence = 1;

  bool operator==(const ConsequenceBand&) const = default;
};

struct RiskAttributeModel {
  enum class Source {
    ServiceTiers,       // rate bound services by provider tier, combine, look up the matrix
    External,           // levels supplied per option id
    UncertaintyBands,   // likelihood from an uncertainty level, consequence from banding a quality value
  };

  std::string id;
  double weight = 0.0;
  Source source = Source::ServiceTiers;
  RiskMatrix matrix;

  // ServiceTiers
  RiskMetricTable table;
  std::vector<std::string> rated_roles;  // empty = every role

  // External
  std::map<std::string, int> levels;
  std::optional<int> default_level;

  // UncertaintyBands
  std::string uncertainty;
  std::map<std::string, int> likelihood_by_level;
  std::string quality;
  std::vector<ConsequenceBand> bands;

  bool operator==(const RiskAttributeModel&) const = default;
};

std::string_view to_string(RiskAttributeModel::Source source);
std::optional<RiskAttributeModel::Source> parse_risk_source(std::string_view text);

enum class VetoMode { OverallRisk, AttributeLevel };

struct RiskModel {
  std::vector<RiskAttributeModel> attributes;
  Rounding rounding = Rounding::HalfUp;
  std::optional<double> veto_threshold;
  VetoMode veto_mode = VetoMode::OverallRisk;

  /// Weights sum to 1, matrices are monotone, tables fit the matrix axes.
  void validate() const;

  bool operator==(const RiskModel&) const = default;
};

struct AttributeRisk {
  std::optional<int> likelihood;
  std::optional<int> consequence;
  int level = 1;
  bool supplied = false;  // level came from outside the matrix
};

struct RiskEstimate {
  std::string option_id;
  std::map<std::string, AttributeRisk> per_attribute;
  double estimated_risk = 0.0;
  bool vetoed = false;
};

/// Inputs some attribute sources need besides the option's bindings.
struct RiskContext {
  const ServiceCatalog* catalog = nullptr;
  const UncertaintyState* uncertainty = nullptr;
  const QualityMap* qualities = nullptr;  // estimated qualities of the option
};

/// ER = sum of level * weight over attributes. `supplied_levels` (attribute id
/// -> level) takes precedence over every source.
RiskEstimate estimate_risk(const Configuration& option, const RiskModel& model, const RiskContext& context,
                           const std::map<std::string, int>* supplied_levels = nullptr);

/// Keeps the estimates with ER <= threshold, order preserved.
std::vector<RiskEstimate> risk_veto(std::span<const RiskEstimate> estimates, double threshold);

}  // namespace bcr
