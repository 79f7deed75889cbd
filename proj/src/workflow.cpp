#include "bcr/workflow.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <unordered_map>

#include <boost/math/distributions/normal.hpp>

namespace bcr {

namespace {

constexpr double kProbabilityTolerance = 1e-9;
constexpr std::size_t kMaxExactChoices = 20;
constexpr std::size_t kMaxExactPaths = std::size_t{1} << 20;
constexpr std::size_t kMaxStepsPerRun = 1'000'000;

double effective_probability(const WorkflowOutcome& outcome, const UncertaintyState* uncertainty) {
  if (uncertainty) {
    auto it = uncertainty->branch_probabilities.find(outcome.id);
    if (it != uncertainty->branch_probabilities.end()) return it->second;
  }
  return outcome.probability;
}

// Index-based form of a workflow with the option's services and the
// uncertainty overrides already applied.
struct ResolvedStep {
  bool invoke = false;
  double failure_probability = 0.0;
  double resource = 0.0;
  int next = -1;
  std::vector<double> cumulative;
  std::vector<double> probability;
  std::vector<int> targets;
};

struct ResolvedWorkflow {
  std::vector<ResolvedStep> steps;
  int entry = -1;

  int pick(const ResolvedStep& step, double u) const {
    for (std::size_t i = 0; i < step.cumulative.size(); ++i) {
      if (u < step.cumulative[i]) return step.targets[i];
    }
    // rounding left the last cumulative just below 1
    for (std::size_t i = step.probability.size(); i > 0; --i) {
      if (step.probability[i - 1] > 0.0) return step.targets[i - 1];
    }
    return step.targets.back();
  }
};

ResolvedWorkflow resolve(const WorkflowModel& workflow, const ServiceCatalog& catalog, const Configuration& option,
                         const UncertaintyState& uncertainty) {
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < workflow.nodes.size(); ++i) index.emplace(workflow.nodes[i].id, static_cast<int>(i));
  auto target = [&](const std::string& id) -> int {
    if (id.empty()) return -1;
    auto it = index.find(id);
    if (it == index.end()) throw Error(ErrorCode::InvalidModel, "workflow references unknown node '" + id + "'");
    return it->second;
  };

  ResolvedWorkflow out;
  out.steps.resize(workflow.nodes.size());
  for (std::size_t i = 0; i < workflow.nodes.size(); ++i) {
    const auto& node = workflow.nodes[i];
    auto& step = out.steps[i];
    if (node.kind == WorkflowNode::Kind::Invoke) {
      auto bound = option.bindings.find(node.role);
      if (bound == option.bindings.end()) {
        throw Error(ErrorCode::UnboundRole, "option '" + option.id + "' does not bind role '" + node.role + "'");
      }
      const auto& service = catalog.service(bound->second);
      double f = service.failure_probability;
      if (auto d = uncertainty.reliability_drift.find(service.id); d != uncertainty.reliability_drift.end()) {
        f += d->second;
      }
      step.invoke = true;
      step.failure_probability = std::clamp(f, 0.0, 1.0);
      step.resource = service.resource_usage;
      step.next = target(node.next);
    } else {
      double total = 0.0;
      for (const auto& outcome : node.outcomes) {
        double p = effective_probability(outcome, &uncertainty);
        total += p;
        step.probability.push_back(p);
        step.cumulative.push_back(total);
        step.targets.push_back(target(outcome.next));
      }
      if (node.outcomes.empty() || std::abs(total - 1.0) > kProbabilityTolerance) {
        throw Error(ErrorCode::InvalidModel, "outcome probabilities of '" + node.id + "' do not sum to 1");
      }
    }
  }
  out.entry = target(workflow.entry);
  if (out.entry < 0) throw Error(ErrorCode::InvalidModel, "workflow has no entry node");
  return out;
}

RunOutcome run_once(const ResolvedWorkflow& wf, Rng& rng) {
  RunOutcome out;
  int at = wf.entry;
  std::size_t steps = 0;
  while (at >= 0) {
    if (++steps > kMaxStepsPerRun) throw Error(ErrorCode::InvalidModel, "workflow run exceeded the step limit");
    const auto& step = wf.steps[static_cast<std::size_t>(at)];
    if (step.invoke) {
      out.resource_used += step.resource;
      const double f = step.failure_probability;
      if (f >= 1.0 || (f > 0.0 && rng.uniform() < f)) out.failed = true;
      at = step.next;
    } else {
      at = wf.pick(step, rng.uniform());
    }
  }
  return out;
}

bool has_cycle(const WorkflowModel& workflow) {
  std::unordered_map<std::string, int> state;  // 0 new, 1 on stack, 2 done
  auto next_of = [&](const WorkflowNode& n) {
    std::vector<std::string> out;
    if (n.kind == WorkflowNode::Kind::Invoke) {
      if (!n.next.empty()) out.push_back(n.next);
    } else {
      for (const auto& o : n.outcomes) {
        if (!o.next.empty()) out.push_back(o.next);
      }
    }
    return out;
  };
  // iterative DFS
  for (const auto& root : workflow.nodes) {
    if (state[root.id] != 0) continue;
    std::vector<std::pair<const WorkflowNode*, std::size_t>> stack{{&root, 0}};
    state[root.id] = 1;
    while (!stack.empty()) {
      auto& [node, child] = stack.back();
      auto succ = next_of(*node);
      if (child < succ.size()) {
        const auto* n = workflow.find(succ[child++]);
        if (!n) continue;
        int& s = state[n->id];
        if (s == 1) return true;
        if (s == 0) {
          s = 1;
          stack.emplace_back(n, 0);
        }
      } else {
        state[node->id] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

}  // namespace

const WorkflowNode* WorkflowModel::find(std::string_view id) const {
  auto it = std::find_if(nodes.begin(), nodes.end(), [&](const auto& n) { return n.id == id; });
  return it == nodes.end() ? nullptr : &*it;
}

std::size_t WorkflowModel::choice_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const auto& n) { return n.kind == WorkflowNode::Kind::Choice; }));
}

void WorkflowModel::validate(std::span<const std::string> roles, const UncertaintyState* uncertainty) const {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::InvalidModel, msg); };
  if (nodes.empty()) fail("workflow has no nodes");
  if (!find(entry)) fail("workflow entry '" + entry + "' is not a node");

  std::set<std::string> ids;
  std::set<std::string> outcome_ids;
  for (const auto& node : nodes) {
    if (!ids.insert(node.id).second) fail("duplicate workflow node '" + node.id + "'");
  }
  auto check_target = [&](const std::string& from, const std::string& to) {
    if (!to.empty() && !ids.contains(to)) fail("node '" + from + "' leads to unknown node '" + to + "'");
  };
  for (const auto& node : nodes) {
    if (node.kind == WorkflowNode::Kind::Invoke) {
      if (std::find(roles.begin(), roles.end(), node.role) == roles.end()) {
        fail("node '" + node.id + "' invokes unknown role '" + node.role + "'");
      }
      check_target(node.id, node.next);
      continue;
    }
    if (node.outcomes.empty()) fail("choice node '" + node.id + "' has no outcomes");
    double total = 0.0;
    for (const auto& o : node.outcomes) {
      if (!outcome_ids.insert(o.id).second) fail("duplicate branch id '" + o.id + "'");
      double p = effective_probability(o, uncertainty);
      if (!(p >= 0.0 && p <= 1.0)) fail("branch '" + o.id + "' probability outside [0,1]");
      total += p;
      check_target(node.id, o.next);
    }
    if (std::abs(total - 1.0) > kProbabilityTolerance) {
      fail("outcome probabilities of '" + node.id + "' sum to " + std::to_string(total));
    }
  }
  if (uncertainty) {
    for (const auto& [id, p] : uncertainty->branch_probabilities) {
      if (!outcome_ids.contains(id)) fail("uncertainty names unknown branch '" + id + "'");
    }
  }
  if (acyclic && has_cycle(*this)) fail("workflow is marked acyclic but contains a cycle");
}

std::uint64_t Rng::mix(std::uint64_t x) {
  // SplitMix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::substream(std::uint64_t seed, std::string_view key) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : key) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return Rng(mix(seed) ^ h);
}

Rng Rng::substream(std::uint64_t seed, std::string_view key, std::uint64_t index) {
  return substream(mix(seed) + mix(index ^ 0x5851f42d4c957f2dULL), key);
}

double Rng::normal(double mean, double stddev) {
  // Box-Muller; avoids the implementation-defined std::normal_distribution
  double u1 = uniform();
  double u2 = uniform();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return mean + stddev * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double z_for_confidence(double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw Error(ErrorCode::InvalidModel, "confidence must lie in (0,1)");
  }
  return boost::math::quantile(boost::math::normal_distribution<double>(), 0.5 + confidence / 2.0);
}

RunOutcome simulate_run(const WorkflowModel& workflow, const ServiceCatalog& catalog, const Configuration& option,
                        const UncertaintyState& uncertainty, Rng& rng) {
  return run_once(resolve(workflow, catalog, option, uncertainty), rng);
}

SimulationResult monte_carlo_estimate(const WorkflowModel& workflow, const ServiceCatalog& catalog,
                                      const Configuration& option, const UncertaintyState& uncertainty,
                                      const SimulationParams& params) {
  if (params.runs < 1) throw Error(ErrorCode::InvalidModel, "simulation needs at least one run");
  const auto wf = resolve(workflow, catalog, option, uncertainty);
  const double z = z_for_confidence(params.confidence);
  Rng rng = Rng::substream(params.seed, option.id);

  std::uint64_t n = 0;
  std::uint64_t failures = 0;
  double resource_sum = 0.0;
  double mean = 0.0;
  double m2 = 0.0;  // Welford
  SimulationResult result;

  auto summarize = [&] {
    const double nd = static_cast<double>(n);
    const double p = static_cast<double>(failures) / nd;
    result.runs_executed = n;
    result.failure_rate_percent = 100.0 * p;
    result.mean_resource_usage = resource_sum / nd;
    result.failure_half_width = 100.0 * z * std::sqrt(p * (1.0 - p) / nd);
    result.resource_half_width = n > 1 ? z * std::sqrt(m2 / (nd - 1.0) / nd) : 0.0;
  };

  while (true) {
    for (std::uint64_t i = 0; i < params.runs; ++i) {
      auto run = run_once(wf, rng);
      ++n;
      if (run.failed) ++failures;
      resource_sum += run.resource_used;
      const double delta = run.resource_used - mean;
      mean += delta / static_cast<double>(n);
      m2 += delta * (run.resource_used - mean);
    }
    summarize();
    if (!params.target_half_width) return result;
    const double target = *params.target_half_width;
    if (result.failure_half_width <= target && result.resource_half_width <= target) return result;
    if (n + params.runs > params.run_cap) {
      throw RunCapExceededError(result, "half-width target not met after " + std::to_string(n) + " runs");
    }
  }
}

ExactResult enumerate_exact(const WorkflowModel& workflow, const ServiceCatalog& catalog,
                            const Configuration& option, const UncertaintyState& uncertainty) {
  if (workflow.choice_count() > kMaxExactChoices) {
    throw Error(ErrorCode::TooManyPaths, "exact enumeration supports at most 20 choice nodes");
  }
  if (has_cycle(workflow)) throw Error(ErrorCode::InvalidModel, "exact enumeration needs an acyclic workflow");
  const auto wf = resolve(workflow, catalog, option, uncertainty);

  ExactResult out;
  double failure = 0.0;
  struct Frame {
    int at;
    double probability;
    double survive;
    double resource;
  };
  std::vector<Frame> stack{{wf.entry, 1.0, 1.0, 0.0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    while (f.at >= 0) {
      const auto& step = wf.steps[static_cast<std::size_t>(f.at)];
      if (step.invoke) {
        f.survive *= 1.0 - step.failure_probability;
        f.resource += step.resource;
        f.at = step.next;
        continue;
      }
      // follow the first live outcome, defer the rest
      int follow = -2;
      double follow_p = 0.0;
      for (std::size_t i = 0; i < step.targets.size(); ++i) {
        const double p = step.probability[i];
        if (p <= 0.0) continue;
        if (follow == -2) {
          follow = step.targets[i];
          follow_p = p;
        } else {
          stack.push_back({step.targets[i], f.probability * p, f.survive, f.resource});
        }
      }
      f.at = follow;
      f.probability *= follow_p;
    }
    if (++out.path_count > kMaxExactPaths) throw Error(ErrorCode::TooManyPaths, "workflow has too many paths");
    out.path_probability_sum += f.probability;
    failure += f.probability * (1.0 - f.survive);
    out.mean_resource_usage += f.probability * f.resource;
  }
  out.failure_rate_percent = 100.0 * failure;
  return out;
}

}  // namespace bcr
