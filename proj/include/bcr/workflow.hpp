#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bcr/domain.hpp"
#include "bcr/error.hpp"

namespace bcr {

inline constexpr std::string_view kFailureRate = "failureRate";
inline constexpr std::string_view kResourceUsage = "resourceUsage";

struct WorkflowOutcome {
  std::string id;  // branch id; UncertaintyState::branch_probabilities overrides by this key
  double probability = 0.0;
  std::string next;  // empty = exit

  bool operator==(const WorkflowOutcome&) const = default;
};

struct WorkflowNode {
  enum class Kind { Invoke, Choice };

  std::string id;
  Kind kind = Kind::Invoke;
  std::string role;                    // Invoke
  std::string next;                    // Invoke; empty = exit
  std::vector<WorkflowOutcome> outcomes;  // Choice

  bool operator==(const WorkflowNode&) const = default;
};

/// Probabilistic invocation pattern over abstract roles. Walking from `entry`,
/// invoke nodes call the service bound to their role and choice nodes pick
/// one outcome by probability.
struct WorkflowModel {
  std::string entry;
  std::vector<WorkflowNode> nodes;
  bool acyclic = true;

  const WorkflowNode* find(std::string_view id) const;
  std::size_t choice_count() const;

  /// Structure checks: entry and targets exist, roles are in `roles`, outcome
  /// probabilities (after `uncertainty` overrides) sum to 1, DAG when acyclic.
  void validate(std::span<const std::string> roles, const UncertaintyState* uncertainty = nullptr) const;

  bool operator==(const WorkflowModel&) const = default;
};

struct SimulationParams {
  std::uint64_t runs = 10'000;
  std::uint64_t seed = 42;
  double confidence = 0.95;
  std::optional<double> target_half_width;
  std::uint64_t run_cap = 10'000'000;
};

struct SimulationResult {
  double failure_rate_percent = 0.0;
  double mean_resource_usage = 0.0;
  double failure_half_width = 0.0;   // percent points
  double resource_half_width = 0.0;  // resource units
  std::uint64_t runs_executed = 0;

  bool operator==(const SimulationResult&) const = default;
};

class RunCapExceededError : public Error {
 public:
  RunCapExceededError(SimulationResult partial, const std::string& message)
      : Error(ErrorCode::RunCapExceeded, message), partial_(partial) {}
  const SimulationResult& partial() const noexcept { return partial_; }

 private:
  SimulationResult partial_;
};

struct RunOutcome {
  bool failed = false;
  double resource_used = 0.0;
};

struct ExactResult {
  double failure_rate_percent = 0.0;
  double mean_resource_usage = 0.0;
  double path_probability_sum = 0.0;
  std::size_t path_count = 0;
};

/// Random source for simulation: std::mt19937_64 seeded through SplitMix64
/// so that (seed, stream key) pairs give independent, reproducible substreams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

  /// Substream keyed by an arbitrary string, e.g. an option id.
  static Rng substream(std::uint64_t seed, std::string_view key);
  static Rng substream(std::uint64_t seed, std::string_view key, std::uint64_t index);

  /// Uniform in [0, 1) with 53 random bits; identical on every platform.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double normal(double mean, double stddev);
  std::mt19937_64& engine() { return engine_; }

  static std::uint64_t mix(std::uint64_t x);

 private:
  std::mt19937_64 engine_;
};

RunOutcome simulate_run(const WorkflowModel& workflow, const ServiceCatalog& catalog, const Configuration& option,
                        const UncertaintyState& uncertainty, Rng& rng);

SimulationResult monte_carlo_estimate(const WorkflowModel& workflow, const ServiceCatalog& catalog,
                                      const Configuration& option, const UncertaintyState& uncertainty,
                                      const SimulationParams& params);

/// Exact path enumeration; limited to acyclic workflows with at most 20 choice nodes.
ExactResult enumerate_exact(const WorkflowModel& workflow, const ServiceCatalog& catalog,
                            const Configuration& option, const UncertaintyState& uncertainty);

/// Two-sided standard-normal quantile for the given confidence, e.g. 1.96 for 0.95.
double z_for_confidence(double confidence);

}  // namespace bcr
