#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcr/cost.hpp"
#include "bcr/domain.hpp"

namespace bcr {

// Quality attributes produced by table lookups.
inline constexpr std::string_view kEnergy = "energy";
inline constexpr std::string_view kPacketLoss = "packetLoss";
inline constexpr std::string_view kJammingPacketLoss = "jammingPacketLoss";

// Roles of a table-driven configuration.
inline constexpr std::string_view kPowerRole = "power";
inline constexpr std::string_view kScheduleRole = "schedule";

struct TableConfiguration {
  std::string id;
  std::string power;
  std::string schedule;
  double energy = 0.0;
  std::map<std::string, double> noise_loss;    // level -> packet loss %
  std::map<std::string, double> jamming_loss;  // level -> packet loss %

  bool operator==(const TableConfiguration&) const = default;
};

/// Managed system given by expected-value tables instead of a workflow: each
/// configuration is a (power setting, schedule) pair whose energy and packet
/// loss per uncertainty level are looked up directly.
struct TableScenarioData {
  std::string noise_uncertainty = "noise";
  std::string jamming_uncertainty = "jamming";
  std::vector<std::string> levels;
  std::vector<TableConfiguration> configurations;
  std::map<std::string, double> power_change_cost;  // schedule in effect after the change -> cost
  std::map<std::pair<std::string, std::string>, double> schedule_switch_cost;  // (from, to) -> cost

  const TableConfiguration& find(std::string_view id) const;  // throws UnknownConfiguration
  Configuration configuration(std::string_view id) const;
  std::vector<Configuration> all_configurations() const;

  /// Every (configuration, level) cell populated and costs present for all transitions.
  void validate() const;

  bool operator==(const TableScenarioData&) const = default;
};

/// Energy, total packet loss (noise + jamming) and the jamming share.
QualityMap lookup_table_qualities(const TableScenarioData& data, std::string_view config_id,
                                  std::string_view noise_level, std::string_view jamming_level);

/// Changing the power costs the entry for the target schedule; switching the
/// schedule adds the (from, to) entry.
CostEstimate table_adaptation_cost(const TableScenarioData& data, std::string_view from_id, std::string_view to_id);

}  // namespace bcr
