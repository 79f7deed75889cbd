#include "bcr/table_model.hpp"

#include <algorithm>
#include <set>

#include "bcr/error.hpp"

namespace bcr {

const TableConfiguration& TableScenarioData::find(std::string_view id) const {
  auto it = std::find_if(configurations.begin(), configurations.end(), [&](const auto& c) { return c.id == id; });
  if (it == configurations.end()) {
    throw Error(ErrorCode::UnknownConfiguration, "unknown configuration '" + std::string(id) + "'");
  }
  return *it;
}

Configuration TableScenarioData::configuration(std::string_view id) const {
  const auto& c = find(id);
  Configuration out;
  out.id = c.id;
  out.bindings.emplace(kPowerRole, c.power);
  out.bindings.emplace(kScheduleRole, c.schedule);
  return out;
}

std::vector<Configuration> TableScenarioData::all_configurations() const {
  std::vector<Configuration> out;
  for (const auto& c : configurations) out.push_back(configuration(c.id));
  return out;
}

void TableScenarioData::validate() const {
  auto fail = [](const std::string& m) { throw Error(ErrorCode::InvalidModel, m); };
  if (levels.empty()) fail("table model declares no uncertainty levels");
  if (configurations.empty()) fail("table model has no configurations");
  std::set<std::string> ids;
  std::set<std::pair<std::string, std::string>> settings;
  std::set<std::string> schedules;
  for (const auto& c : configurations) {
    if (!ids.insert(c.id).second) fail("duplicate configuration '" + c.id + "'");
    if (!settings.emplace(c.power, c.schedule).second) fail("configuration '" + c.id + "' repeats a setting");
    schedules.insert(c.schedule);
    if (!(c.energy >= 0.0)) fail("configuration '" + c.id + "' has negative energy");
    for (const auto& level : levels) {
      if (!c.noise_loss.contains(level) || !c.jamming_loss.contains(level)) {
        fail("configuration '" + c.id + "' lacks packet loss for level '" + level + "'");
      }
    }
  }
  for (const auto& s : schedules) {
    if (!power_change_cost.contains(s)) fail("no power change cost under schedule '" + s + "'");
    for (const auto& t : schedules) {
      if (s != t && !schedule_switch_cost.contains({s, t})) fail("no cost to switch " + s + " -> " + t);
    }
  }
}

QualityMap lookup_table_qualities(const TableScenarioData& data, std::string_view config_id,
                                  std::string_view noise_level, std::string_view jamming_level) {
  const auto& c = data.find(config_id);
  auto level = [&](const std::map<std::string, double>& row, std::string_view l, const char* what) {
    auto it = row.find(std::string(l));
    if (it == row.end()) {
      throw Error(ErrorCode::MissingAttribute, std::string("no ") + what + " level '" + std::string(l) + "'");
    }
    return it->second;
  };
  const double noise = level(c.noise_loss, noise_level, "noise");
  const double jamming = level(c.jamming_loss, jamming_level, "jamming");
  return {{std::string(kEnergy), c.energy},
          {std::string(kPacketLoss), noise + jamming},
          {std::string(kJammingPacketLoss), jamming}};
}

CostEstimate table_adaptation_cost(const TableScenarioData& data, std::string_view from_id, std::string_view to_id) {
  const auto& from = data.find(from_id);
  const auto& to = data.find(to_id);
  CostEstimate out;
  out.option_id = to.id;
  if (from.power != to.power) {
    auto it = data.power_change_cost.find(to.schedule);
    if (it == data.power_change_cost.end()) {
      throw Error(ErrorCode::MissingCostEntry, "no power change cost under schedule '" + to.schedule + "'");
    }
    out.per_change.emplace_back(std::string(kPowerRole), it->second);
    out.estimated_cost += it->second;
  }
  if (from.schedule != to.schedule) {
    auto it = data.schedule_switch_cost.find({from.schedule, to.schedule});
    if (it == data.schedule_switch_cost.end()) {
      throw Error(ErrorCode::MissingCostEntry, "no cost to switch " + from.schedule + " -> " + to.schedule);
    }
    out.per_change.emplace_back(std::string(kScheduleRole), it->second);
    out.estimated_cost += it->second;
  }
  return out;
}

}  // namespace bcr
