#include "bcr/engine.hpp"

#include <algorithm>
#include <future>

#include "bcr/error.hpp"
#include "bcr/table_model.hpp"

namespace bcr {

namespace {

std::string level_of(const UncertaintyState& u, const std::string& id) {
  auto it = u.levels.find(id);
  if (it == u.levels.end()) throw Error(ErrorCode::MissingAttribute, "no level given for uncertainty '" + id + "'");
  return it->second;
}

bool overrides_cover_goals(const ScenarioSpec& spec, const std::string& id) {
  auto it = spec.utility_overrides.find(id);
  if (it == spec.utility_overrides.end()) return false;
  return std::all_of(spec.goals.begin(), spec.goals.end(),
                     [&](const auto& g) { return it->second.contains(g.attribute()); });
}

CostEstimate option_cost(const ScenarioSpec& spec, const Configuration& current, const Configuration& option) {
  if (spec.table_model) return table_adaptation_cost(*spec.table_model, current.id, option.id);
  if (!spec.cost_model) throw Error(ErrorCode::InvalidModel, "scenario has no cost model");
  return estimate_cost(current, option, *spec.cost_model, spec.catalog);
}

struct Partial {
  QualityMap qualities;
  QualityMap utilities;
  CostEstimate cost;
  RiskEstimate risk;
};

Partial analyze(const ScenarioSpec& spec, const Configuration& current, const Configuration& option,
                const UncertaintyState& uncertainty, const SimulationParams& params) {
  Partial p;
  p.qualities = estimate_qualities(spec, option, uncertainty, params);
  p.utilities = option_utilities(spec, option.id, p.qualities);
  p.cost = option_cost(spec, current, option);
  const RiskContext ctx{&spec.catalog, &uncertainty, &p.qualities};
  p.risk = estimate_risk(option, spec.risk_model, ctx);
  return p;
}

}  // namespace

const OptionEvaluation* Evaluation::find(std::string_view id) const {
  for (const auto& o : options) {
    if (o.id() == id) return &o;
  }
  return nullptr;
}

const OptionEvaluation* Evaluation::selected() const {
  return decision.no_adaptation ? nullptr : find(decision.selected);
}

QualityMap estimate_qualities(const ScenarioSpec& spec, const Configuration& option,
                              const UncertaintyState& uncertainty, const SimulationParams& params) {
  if (spec.table_model) {
    const auto& t = *spec.table_model;
    return lookup_table_qualities(t, option.id, level_of(uncertainty, t.noise_uncertainty),
                                  level_of(uncertainty, t.jamming_uncertainty));
  }
  if (option.observed_qualities) return *option.observed_qualities;
  if (overrides_cover_goals(spec, option.id)) return {};
  if (!spec.workflow) throw Error(ErrorCode::InvalidModel, "scenario has neither a workflow nor a table model");
  return estimate_option_qualities(option, *spec.workflow, spec.catalog, uncertainty, params);
}

QualityMap option_utilities(const ScenarioSpec& spec, const std::string& id, const QualityMap& qualities) {
  QualityMap out;
  auto fixed = spec.utility_overrides.find(id);
  for (const auto& g : spec.goals) {
    if (fixed != spec.utility_overrides.end()) {
      auto u = fixed->second.find(g.attribute());
      if (u != fixed->second.end()) {
        out[g.attribute()] = u->second;
        continue;
      }
    }
    auto v = qualities.find(g.attribute());
    if (v == qualities.end()) {
      throw Error(ErrorCode::MissingAttribute, "no estimate of '" + g.attribute() + "' for '" + id + "'");
    }
    out[g.attribute()] = g.curve(v->second);
  }
  return out;
}

Evaluation evaluate(const ScenarioSpec& spec, const Configuration& current, const UncertaintyState& uncertainty,
                    const EvaluationOptions& options) {
  Evaluation ev;
  ev.current = current;
  ev.current_qualities = estimate_qualities(spec, current, uncertainty, options.simulation);
  ev.current_utilities = option_utilities(spec, current.id, ev.current_qualities);
  std::optional<double> baseline_risk;
  if (spec.decision.include_current_as_baseline) {
    const RiskContext ctx{&spec.catalog, &uncertainty, &ev.current_qualities};
    ev.current_risk = estimate_risk(current, spec.risk_model, ctx);
    baseline_risk = ev.current_risk->estimated_risk;
  }

  std::vector<Configuration> space;
  for (auto& c : enumerate_adaptation_space(spec)) {
    if (c.same_bindings(current)) continue;
    if (!options.option_filter.empty() &&
        std::find(options.option_filter.begin(), options.option_filter.end(), c.id) == options.option_filter.end()) {
      continue;
    }
    space.push_back(std::move(c));
  }
  for (const auto& id : options.option_filter) {
    if (id == current.id) continue;
    if (std::none_of(space.begin(), space.end(), [&](const auto& c) { return c.id == id; })) {
      throw Error(ErrorCode::UnknownConfiguration, "option '" + id + "' is not in the adaptation space");
    }
  }

  std::vector<Partial> partials(space.size());
  if (options.parallel && space.size() > 1) {
    std::vector<std::future<Partial>> jobs;
    jobs.reserve(space.size());
    for (const auto& option : space) {
      jobs.push_back(std::async(std::launch::async, [&, opt = &option] {
        return analyze(spec, current, *opt, uncertainty, options.simulation);
      }));
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) partials[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < space.size(); ++i) {
      partials[i] = analyze(spec, current, space[i], uncertainty, options.simulation);
    }
  }

  const auto& policy = spec.decision;
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < space.size(); ++i) {
    auto& p = partials[i];
    OptionEvaluation o;
    o.configuration = space[i];
    o.benefit = estimate_benefit(space[i].id, std::move(p.qualities), std::move(p.utilities), ev.current_utilities,
                                 spec.goals);
    o.cost = std::move(p.cost);
    o.desirability = desirability(o.benefit.estimated_benefit, o.cost.estimated_cost, policy.benefit_scaling,
                                  policy.cost_scaling, policy.method, space[i].id);
    o.risk = std::move(p.risk);
    if (!o.risk.vetoed) {
      candidates.push_back({o.id(), o.desirability.estimated_desirability, o.risk.estimated_risk});
    }
    ev.options.push_back(std::move(o));
  }

  ev.decision = select(current, candidates, policy, baseline_risk);
  for (auto& o : ev.options) {
    auto it = ev.decision.scores.find(o.id());
    if (it != ev.decision.scores.end()) o.score = it->second;
  }
  return ev;
}

Evaluation evaluate(const ScenarioSpec& spec, const EvaluationOptions& options) {
  return evaluate(spec, spec.initial_configuration, spec.uncertainty, options);
}

std::vector<SweepOption> sweep_options(const Evaluation& ev) {
  std::vector<SweepOption> out;
  for (const auto& o : ev.options) {
    if (o.risk.vetoed) continue;
    out.push_back({o.id(), o.benefit.estimated_benefit, o.cost.estimated_cost, o.desirability.estimated_desirability,
                   o.risk.estimated_risk});
  }
  return out;
}

}  // namespace bcr
