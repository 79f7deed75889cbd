#include "bcr/mape.hpp"

#include <algorithm>
#include <ostream>

#include "bcr/error.hpp"

namespace bcr {

using nlohmann::json;

std::string_view to_string(Trigger trigger) {
  return trigger == Trigger::EveryCycle ? "everyCycle" : "onGoalViolation";
}

std::optional<Trigger> parse_trigger(std::string_view text) {
  if (text == "everyCycle" || text == "every-cycle") return Trigger::EveryCycle;
  if (text == "onGoalViolation" || text == "on-goal-violation") return Trigger::OnGoalViolation;
  return std::nullopt;
}

UncertaintyState overlay_uncertainty(const UncertaintyState& base, const UncertaintyState& entry) {
  UncertaintyState out = base;
  for (const auto& [k, v] : entry.branch_probabilities) out.branch_probabilities[k] = v;
  for (const auto& [k, v] : entry.reliability_drift) out.reliability_drift[k] = v;
  for (const auto& [k, v] : entry.levels) out.levels[k] = v;
  return out;
}

UncertaintyState drift_branch_probabilities(const UncertaintyState& state, const WorkflowModel& workflow, double sigma,
                                            Rng& rng) {
  if (sigma < 0.0) throw Error(ErrorCode::InvalidModel, "drift sigma must be >= 0");
  UncertaintyState out = state;
  if (sigma == 0.0) return out;
  for (const auto& node : workflow.nodes) {
    if (node.kind != WorkflowNode::Kind::Choice) continue;
    std::vector<double> p;
    double total = 0.0;
    for (const auto& o : node.outcomes) {
      auto it = state.branch_probabilities.find(o.id);
      const double base = it == state.branch_probabilities.end() ? o.probability : it->second;
      p.push_back(std::clamp(base + rng.normal(0.0, sigma), 0.0, 1.0));
      total += p.back();
    }
    if (total <= 0.0) continue;  // every sibling clamped to zero: keep the previous step
    for (std::size_t i = 0; i < p.size(); ++i) out.branch_probabilities[node.outcomes[i].id] = p[i] / total;
  }
  return out;
}

EpisodeLog run_episode(const ScenarioSpec& spec, const EpisodeConfig& episode) {
  if (episode.cycles < 1) throw Error(ErrorCode::InvalidModel, "an episode needs at least one cycle");
  if (episode.drift_sigma > 0.0 && !spec.workflow) {
    throw Error(ErrorCode::InvalidModel, "branch drift needs a workflow");
  }

  EpisodeLog log;
  log.scenario = spec.name;
  log.seed = episode.evaluation.simulation.seed;

  Configuration current = spec.initial_configuration;
  UncertaintyState drifted = spec.uncertainty;
  double cumulative = 0.0;

  for (std::size_t cycle = 0; cycle < episode.cycles; ++cycle) {
    auto options = episode.evaluation;
    options.simulation.seed = Rng::mix(episode.evaluation.simulation.seed + 0x9e3779b97f4a7c15ULL * (cycle + 1));

    // Monitor
    UncertaintyState uncertainty = drifted;
    if (!episode.trace.empty()) {
      uncertainty = overlay_uncertainty(uncertainty, episode.trace[std::min(cycle, episode.trace.size() - 1)]);
    }
    if (episode.drift_sigma > 0.0) {
      auto rng = Rng::substream(episode.evaluation.simulation.seed, "drift", cycle);
      drifted = drift_branch_probabilities(drifted, *spec.workflow, episode.drift_sigma, rng);
      uncertainty = drifted;
      if (!episode.trace.empty()) {
        uncertainty = overlay_uncertainty(uncertainty, episode.trace[std::min(cycle, episode.trace.size() - 1)]);
        // Scripted branch values win over the walk, so keep it consistent with them.
        drifted.branch_probabilities = uncertainty.branch_probabilities;
      }
    }

    CycleRecord rec;
    rec.cycle = cycle;
    rec.uncertainty = uncertainty;
    rec.current = current.id;

    if (cycle > 0) current.observed_qualities.reset();
    const auto qualities = estimate_qualities(spec, current, uncertainty, options.simulation);
    current.observed_qualities = qualities;

    if (episode.trigger == Trigger::OnGoalViolation) {
      rec.triggered = violates_goals(option_utilities(spec, current.id, qualities), spec.goals);
    }

    if (rec.triggered) {
      // Analyze + Plan
      Evaluation ev;
      try {
        ev = evaluate(spec, current, uncertainty, options);
      } catch (const Error& e) {
        throw Error(e.code(), "cycle " + std::to_string(cycle) + ": " + e.message());
      }
      rec.evaluated_option_count = ev.options.size();
      rec.scores = ev.decision.scores;
      rec.ebcr = ev.decision.scores.at(ev.decision.selected);
      if (const auto* chosen = ev.selected()) {
        // Execute
        rec.selected_option = chosen->id();
        rec.eb = chosen->benefit.estimated_benefit;
        rec.ec = chosen->cost.estimated_cost;
        rec.ed = chosen->desirability.estimated_desirability;
        rec.er = chosen->risk.estimated_risk;
        cumulative += rec.ec;
        current = chosen->configuration;
        current.observed_qualities.reset();
      } else {
        rec.selected_option = kNoChange;
        rec.er = ev.current_risk ? ev.current_risk->estimated_risk : 0.0;
      }
    } else {
      rec.selected_option = kNoChange;
    }
    rec.cumulative_cost = cumulative;
    log.cycles.push_back(std::move(rec));
  }
  current.observed_qualities.reset();
  log.final_configuration = current;
  return log;
}

json cycle_to_json(const CycleRecord& r) {
  json out = {{"cycle", r.cycle},
              {"uncertainty", uncertainty_to_json(r.uncertainty)},
              {"current", r.current},
              {"triggered", r.triggered},
              {"evaluatedOptionCount", r.evaluated_option_count},
              {"selectedOption", r.selected_option},
              {"eb", r.eb},
              {"ec", r.ec},
              {"ed", r.ed},
              {"er", r.er},
              {"ebcr", r.ebcr ? json(*r.ebcr) : json(nullptr)},
              {"cumulativeCost", r.cumulative_cost},
              {"scores", r.scores}};
  return out;
}

void write_jsonl(const EpisodeLog& log, std::ostream& out) {
  for (const auto& r : log.cycles) out << cycle_to_json(r).dump() << '\n';
  out.flush();
  if (!out) throw Error(ErrorCode::SinkWriteError, "failed to write the episode log");
}

}  // namespace bcr
