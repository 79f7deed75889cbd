#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bcr/engine.hpp"

namespace bcr {

inline constexpr std::string_view kNoChange = "no-change";

enum class Trigger { EveryCycle, OnGoalViolation };

std::string_view to_string(Trigger trigger);
std::optional<Trigger> parse_trigger(std::string_view text);

struct EpisodeConfig {
  std::size_t cycles = 1;
  /// Scripted uncertainty, overlaid on the scenario's state. Cycle i uses
  /// entry i; the last entry repeats once the trace runs out.
  std::vector<UncertaintyState> trace;
  /// Step size of the random walk on branch probabilities (0 = none).
  double drift_sigma = 0.0;
  Trigger trigger = Trigger::EveryCycle;
  EvaluationOptions evaluation;
};

struct CycleRecord {
  std::size_t cycle = 0;
  UncertaintyState uncertainty;
  std::string current;  // configuration in place when the cycle started
  bool triggered = true;
  std::size_t evaluated_option_count = 0;
  std::string selected_option;  // kNoChange when nothing was executed
  double eb = 0.0;
  double ec = 0.0;
  double ed = 0.0;
  double er = 0.0;
  std::optional<double> ebcr;
  double cumulative_cost = 0.0;
  std::map<std::string, double> scores;
};

struct EpisodeLog {
  std::string scenario;
  std::uint64_t seed = 0;
  std::vector<CycleRecord> cycles;
  Configuration final_configuration;
};

/// Monitor, Analyze, Plan and Execute for `episode.cycles` cycles over the
/// simulated managed system. Deterministic for a given simulation seed.
EpisodeLog run_episode(const ScenarioSpec& spec, const EpisodeConfig& episode);

/// Trace entry `cycle` overlaid on `base` (maps merged key by key).
UncertaintyState overlay_uncertainty(const UncertaintyState& base, const UncertaintyState& entry);

/// One random-walk step: every outcome probability moves by N(0, sigma),
/// is clamped to [0, 1], and siblings are renormalised.
UncertaintyState drift_branch_probabilities(const UncertaintyState& state, const WorkflowModel& workflow, double sigma,
                                            Rng& rng);

nlohmann::json cycle_to_json(const CycleRecord& record);
/// One JSON object per cycle and line.
void write_jsonl(const EpisodeLog& log, std::ostream& out);

}  // namespace bcr
