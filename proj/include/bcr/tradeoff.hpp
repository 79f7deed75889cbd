#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bcr/desirability.hpp"

namespace bcr {

enum class SweepKind {
  BenefitCost,        // value-for-cost as the benefit scaling changes
  DesirabilityRisk,   // EBCR score as W_VFC goes from 0 to 1, W_R = 1 - W_VFC
};

/// Which benefit-scaling parameter a benefit-cost sweep varies.
enum class SweepParameter { Multiplier, Threshold };

struct SweepRange {
  double lo = 0.0;
  double hi = 1.0;
  double step = 0.01;

  /// lo, lo + step, ... up to hi inclusive; points are lo + i * step, not accumulated.
  std::vector<double> grid() const;
};

struct SweepOption {
  std::string id;
  double benefit = 0.0;       // EB (benefit-cost sweeps)
  double cost = 0.0;          // EC (benefit-cost sweeps)
  double desirability = 0.0;  // ED (desirability-risk sweeps)
  double risk = 0.0;          // ER (desirability-risk sweeps)
};

struct SweepSpec {
  SweepKind kind = SweepKind::DesirabilityRisk;
  SweepRange range;
  std::vector<SweepOption> options;
  SweepParameter parameter = SweepParameter::Multiplier;
  double threshold = 0.0;   // fixed T when sweeping the multiplier
  double multiplier = 1.0;  // fixed x when sweeping the threshold
  ScalingFunction cost_scaling;

  void validate() const;
};

struct Crossover {
  std::string option_a;
  std::string option_b;
  double param = 0.0;
  std::string preferred_below;
  std::string preferred_above;
};

struct CrossoverReport {
  std::map<std::string, std::vector<std::pair<double, double>>> series;  // option -> (param, value)
  std::vector<Crossover> crossovers;
};

/// The governing formula of the sweep at one parameter value.
double sweep_value(const SweepSpec& spec, const SweepOption& option, double param);

/// Evaluates every option on the grid and locates rank flips between each
/// pair by bisection to 1e-6. Throws InsufficientOptions below two options.
CrossoverReport sweep(const SweepSpec& spec);

/// CSV "option,param,value" plus "# crossover,a,b,param" comment lines.
/// Returns the number of data rows; throws SinkWriteError when the stream fails.
std::size_t emit_sweep_csv(const CrossoverReport& report, std::ostream& sink);

}  // namespace bcr
