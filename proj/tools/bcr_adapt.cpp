// bcr-adapt: benefit-cost-risk adaptation decisions from scenario files.
//
// Exit codes: 0 success, 2 validation failure, 1 usage or I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bcr/anchors.hpp"
#include "bcr/builtin.hpp"
#include "bcr/engine.hpp"
#include "bcr/error.hpp"
#include "bcr/mape.hpp"
#include "bcr/report.hpp"
#include "bcr/scenario.hpp"
#include "bcr/tradeoff.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInvalid = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bcr::SweepRange parse_range(const std::string& text, const char* flag) {
  bcr::SweepRange r;
  char c1 = 0;
  char c2 = 0;
  std::istringstream in(text);
  if (!(in >> r.lo >> c1 >> r.hi >> c2 >> r.step) || c1 != ':' || c2 != ':' || !in.eof()) {
    throw UsageError(std::string(flag) + " expects lo:hi:step, got '" + text + "'");
  }
  if (!(r.lo < r.hi) || !(r.step > 0)) {
    throw UsageError(std::string(flag) + " needs lo < hi and step > 0, got '" + text + "'");
  }
  return r;
}

std::uint64_t effective_seed(std::uint64_t seed) {
  if (const char* env = std::getenv("BCR_ADAPT_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw UsageError(std::string("BCR_ADAPT_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  return seed;
}

bcr::UncertaintyState apply_levels(bcr::UncertaintyState u, const std::vector<std::string>& levels) {
  for (const auto& kv : levels) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == kv.size()) {
      throw UsageError("--level expects name=value, got '" + kv + "'");
    }
    u.levels[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return u;
}

std::vector<bcr::UncertaintyState> load_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bcr::DocumentError(bcr::ErrorCode::ParseError, "", "cannot open trace '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw bcr::DocumentError(bcr::ErrorCode::ParseError, "", std::string("malformed trace: ") + e.what());
  }
  if (!doc.is_array()) throw bcr::DocumentError(bcr::ErrorCode::ParseError, "", "a trace is an array of states");
  std::vector<bcr::UncertaintyState> out;
  for (std::size_t i = 0; i < doc.size(); ++i) out.push_back(bcr::parse_uncertainty(doc[i], "/" + std::to_string(i)));
  return out;
}

template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw bcr::Error(bcr::ErrorCode::SinkWriteError, "cannot open '" + path + "' for writing");
  fn(out);
  out.flush();
  if (!out) throw bcr::Error(bcr::ErrorCode::SinkWriteError, "failed writing '" + path + "'");
}

struct SimFlags {
  std::uint64_t runs = 10'000;
  std::uint64_t seed = 42;
  double confidence = 0.95;
  std::optional<double> half_width;
  bool parallel = false;

  void add(CLI::App* app) {
    app->add_option("--runs", runs, "Monte Carlo runs per option")->check(CLI::PositiveNumber);
    app->add_option("--seed", seed, "Simulation seed (BCR_ADAPT_SEED overrides)");
    app->add_option("--confidence", confidence, "Confidence level of the estimates")->check(CLI::Range(0.5, 0.999999));
    app->add_option("--half-width", half_width, "Keep simulating until the failure-rate half-width is met");
    app->add_flag("--parallel", parallel, "Estimate options on worker threads");
  }

  bcr::EvaluationOptions options() const {
    bcr::EvaluationOptions o;
    o.simulation.runs = runs;
    o.simulation.seed = effective_seed(seed);
    o.simulation.confidence = confidence;
    o.simulation.target_half_width = half_width;
    o.parallel = parallel;
    return o;
  }
};

int run_sweep(bcr::SweepKind kind, const std::string& scenario_path, const std::string& range_text, double threshold,
              const std::vector<std::string>& filter, const SimFlags& sim, const std::string& out_path,
              const std::string& json_path) {
  const auto spec = bcr::load_scenario(scenario_path);
  auto options = sim.options();
  options.option_filter = filter;
  const auto ev = bcr::evaluate(spec, options);

  bcr::SweepSpec sweep;
  sweep.kind = kind;
  sweep.range = parse_range(range_text, kind == bcr::SweepKind::BenefitCost ? "--x-range" : "--w-range");
  sweep.threshold = threshold;
  sweep.cost_scaling = spec.decision.cost_scaling;
  sweep.options = bcr::sweep_options(ev);
  const auto report = bcr::sweep(sweep);

  with_output(out_path, [&](std::ostream& out) { bcr::emit_sweep_csv(report, out); });
  if (!json_path.empty()) {
    with_output(json_path, [&](std::ostream& out) { out << bcr::sweep_to_json(report).dump(2) << '\n'; });
  }
  for (const auto& c : report.crossovers) {
    std::cerr << "crossover " << c.option_a << '/' << c.option_b << " at " << c.param << ": " << c.preferred_below
              << " below, " << c.preferred_above << " above\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benefit-cost-risk aware adaptation decisions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "bcr-adapt 1.0 (scenario schema 1)");

  // evaluate
  auto* eval_cmd = app.add_subcommand("evaluate", "One-shot decision with the EB, EC, ED, ER and EBCR table");
  std::string eval_scenario;
  std::vector<std::string> eval_filter;
  std::vector<std::string> eval_levels;
  std::string eval_out;
  std::string eval_format = "text";
  SimFlags eval_sim;
  eval_cmd->add_option("--scenario", eval_scenario, "Scenario file")->required();
  eval_cmd->add_option("--options", eval_filter, "Only these option ids")->delimiter(',');
  eval_cmd->add_option("--level", eval_levels, "Uncertainty level, e.g. jamming=High (repeatable)");
  eval_cmd->add_option("--out", eval_out, "Report file (default stdout)");
  eval_cmd->add_option("--format", eval_format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  eval_sim.add(eval_cmd);

  // sweep-a1
  auto* a1_cmd = app.add_subcommand("sweep-a1", "Benefit-cost tradeoff: VFC as the benefit multiplier x varies");
  std::string a1_scenario;
  double a1_threshold = 25.0;
  std::string a1_range = "1:10:0.1";
  std::string a1_out;
  std::string a1_json;
  std::vector<std::string> a1_filter;
  SimFlags a1_sim;
  a1_cmd->add_option("--scenario", a1_scenario, "Scenario file")->required();
  a1_cmd->add_option("--threshold", a1_threshold, "Benefit threshold T")->capture_default_str();
  a1_cmd->add_option("--x-range", a1_range, "lo:hi:step of the multiplier")->capture_default_str();
  a1_cmd->add_option("--options", a1_filter, "Only these option ids")->delimiter(',');
  a1_cmd->add_option("--out", a1_out, "CSV file (default stdout)");
  a1_cmd->add_option("--json", a1_json, "Also write the report as JSON");
  a1_sim.add(a1_cmd);

  // sweep-a2
  auto* a2_cmd = app.add_subcommand("sweep-a2", "Desirability-risk tradeoff: EBCR as W_VFC varies, W_R = 1 - W_VFC");
  std::string a2_scenario;
  std::string a2_range = "0:1:0.01";
  std::string a2_out;
  std::string a2_json;
  std::vector<std::string> a2_filter;
  SimFlags a2_sim;
  a2_cmd->add_option("--scenario", a2_scenario, "Scenario file")->required();
  a2_cmd->add_option("--w-range", a2_range, "lo:hi:step of W_VFC")->capture_default_str();
  a2_cmd->add_option("--options", a2_filter, "Only these option ids")->delimiter(',');
  a2_cmd->add_option("--out", a2_out, "CSV file (default stdout)");
  a2_cmd->add_option("--json", a2_json, "Also write the report as JSON");
  a2_sim.add(a2_cmd);

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Run the feedback loop for a number of cycles");
  std::string sim_scenario;
  std::size_t sim_cycles = 10;
  double sim_sigma = 0.0;
  std::string sim_trigger = "everyCycle";
  std::string sim_trace;
  std::string sim_out;
  std::vector<std::string> sim_filter;
  SimFlags sim_sim;
  sim_cmd->add_option("--scenario", sim_scenario, "Scenario file")->required();
  sim_cmd->add_option("--cycles", sim_cycles, "Number of cycles")->check(CLI::PositiveNumber)->capture_default_str();
  sim_cmd->add_option("--sigma", sim_sigma, "Random-walk step on branch probabilities")->check(CLI::NonNegativeNumber);
  sim_cmd->add_option("--trigger", sim_trigger, "everyCycle or onGoalViolation")
      ->check(CLI::IsMember({"everyCycle", "onGoalViolation", "every-cycle", "on-goal-violation"}));
  sim_cmd->add_option("--trace", sim_trace, "JSON array of per-cycle uncertainty states");
  sim_cmd->add_option("--options", sim_filter, "Only these option ids")->delimiter(',');
  sim_cmd->add_option("--out", sim_out, "JSONL file (default stdout)");
  sim_sim.add(sim_cmd);

  // validate
  auto* val_cmd = app.add_subcommand("validate", "Run the reference anchor suite and print pass/fail per anchor");
  std::string val_scenario;
  val_cmd->add_option("--scenario", val_scenario, "Worked-example scenario (default: built in)");

  // check
  auto* check_cmd = app.add_subcommand("check", "Parse and validate a scenario file");
  std::string check_scenario;
  check_cmd->add_option("scenario", check_scenario, "Scenario file")->required();

  // export
  auto* export_cmd = app.add_subcommand("export", "Write a built-in scenario as JSON");
  std::string export_name;
  std::string export_out;
  export_cmd->add_option("name", export_name, "ehealth, ehealth-worked or iot-network")
      ->required()
      ->check(CLI::IsMember({"ehealth", "ehealth-worked", "iot-network"}));
  export_cmd->add_option("--out", export_out, "File (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval_cmd) {
      auto spec = bcr::load_scenario(eval_scenario);
      spec.uncertainty = apply_levels(spec.uncertainty, eval_levels);
      spec.validate();
      auto options = eval_sim.options();
      options.option_filter = eval_filter;
      const auto ev = bcr::evaluate(spec, options);
      const auto format = *bcr::parse_report_format(eval_format);
      with_output(eval_out, [&](std::ostream& out) { bcr::write_report(ev, format, out, spec.name); });
      return kOk;
    }
    if (*a1_cmd) {
      return run_sweep(bcr::SweepKind::BenefitCost, a1_scenario, a1_range, a1_threshold, a1_filter, a1_sim, a1_out,
                       a1_json);
    }
    if (*a2_cmd) {
      return run_sweep(bcr::SweepKind::DesirabilityRisk, a2_scenario, a2_range, 0.0, a2_filter, a2_sim, a2_out,
                       a2_json);
    }
    if (*sim_cmd) {
      const auto spec = bcr::load_scenario(sim_scenario);
      bcr::EpisodeConfig episode;
      episode.cycles = sim_cycles;
      episode.drift_sigma = sim_sigma;
      episode.trigger = *bcr::parse_trigger(sim_trigger);
      if (!sim_trace.empty()) episode.trace = load_trace(sim_trace);
      episode.evaluation = sim_sim.options();
      episode.evaluation.option_filter = sim_filter;
      const auto log = bcr::run_episode(spec, episode);
      with_output(sim_out, [&](std::ostream& out) { bcr::write_jsonl(log, out); });
      const auto& last = log.cycles.back();
      std::cerr << log.cycles.size() << " cycles, final configuration " << log.final_configuration.id
                << ", cumulative cost " << last.cumulative_cost << '\n';
      return kOk;
    }
    if (*val_cmd) {
      const auto spec = val_scenario.empty() ? bcr::ehealth_worked() : bcr::load_scenario(val_scenario);
      const auto results = bcr::run_reference_anchors(spec);
      return bcr::print_anchor_results(results, std::cout) ? kOk : kInvalid;
    }
    if (*check_cmd) {
      const auto spec = bcr::load_scenario(check_scenario);
      std::cout << "ok: " << (spec.name.empty() ? check_scenario : spec.name) << ", "
                << bcr::enumerate_adaptation_space(spec).size() << " configurations in the adaptation space\n";
      return kOk;
    }
    if (*export_cmd) {
      const auto spec = export_name == "ehealth"          ? bcr::ehealth_default()
                        : export_name == "ehealth-worked" ? bcr::ehealth_worked()
                                                          : bcr::iot_network();
      with_output(export_out, [&](std::ostream& out) { out << bcr::scenario_to_json(spec).dump(2) << '\n'; });
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const bcr::DocumentError& e) {
    std::cerr << e.what() << '\n';
    return e.code() == bcr::ErrorCode::ValidationError ? kInvalid : kUsage;
  } catch (const bcr::Error& e) {
    std::cerr << e.what() << '\n';
    return e.code() == bcr::ErrorCode::SinkWriteError ? kUsage : kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
