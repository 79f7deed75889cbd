#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bcr/benefit.hpp"
#include "bcr/cost.hpp"
#include "bcr/decision.hpp"
#include "bcr/domain.hpp"
#include "bcr/risk.hpp"
#include "bcr/table_model.hpp"
#include "bcr/workflow.hpp"

namespace bcr {

inline constexpr int kSchemaVersion = 1;

enum class SpaceMode { Explicit, Cartesian, Table };

/// Everything one decision problem needs: the managed system (a service
/// workflow or a table model), goals, cost, risk, policy, the current
/// configuration and the adaptation space.
struct ScenarioSpec {
  int schema_version = kSchemaVersion;
  std::string name;
  std::vector<std::string> roles;
  ServiceCatalog catalog;
  std::optional<WorkflowModel> workflow;
  UncertaintyState uncertainty;
  std::vector<AdaptationGoal> goals;
  std::optional<CostModel> cost_model;
  RiskModel risk_model;
  DecisionPolicy decision;
  Configuration initial_configuration;
  SpaceMode space_mode = SpaceMode::Explicit;
  std::vector<Configuration> explicit_space;
  /// Utilities fixed per configuration id, bypassing the curves.
  std::map<std::string, QualityMap> utility_overrides;
  std::optional<TableScenarioData> table_model;

  /// Throws DocumentError(ValidationError) pointing at the offending section.
  void validate() const;

  bool operator==(const ScenarioSpec&) const = default;
};

/// Explicit lists verbatim, otherwise the cartesian or table enumeration.
/// Throws EmptyAdaptationSpace when nothing is left.
std::vector<Configuration> enumerate_adaptation_space(const ScenarioSpec& spec);

/// Resolves a configuration id against the explicit space, the table model,
/// the initial configuration and (for cartesian spaces) the enumeration.
Configuration find_configuration(const ScenarioSpec& spec, std::string_view id);

ScenarioSpec parse_scenario(const nlohmann::json& document);
nlohmann::json scenario_to_json(const ScenarioSpec& spec);

/// Throws DocumentError(ParseError) for unreadable or malformed files.
ScenarioSpec load_scenario(const std::filesystem::path& path);
void save_scenario(const ScenarioSpec& spec, const std::filesystem::path& path);

UncertaintyState parse_uncertainty(const nlohmann::json& document, const std::string& path = "");
nlohmann::json uncertainty_to_json(const UncertaintyState& state);

}  // namespace bcr
