#include "bcr/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "bcr/decision.hpp"
#include "bcr/error.hpp"
#include "bcr/format.hpp"

namespace bcr {

namespace {

constexpr double kBisectionTolerance = 1e-6;

int sign(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

std::vector<double> SweepRange::grid() const {
  if (!(lo < hi) || !(step > 0.0) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorCode::InvalidModel, "sweep range needs lo < hi and step > 0");
  }
  const auto n = static_cast<long long>(std::floor((hi - lo) / step + 1e-9));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n) + 2);
  for (long long i = 0; i <= n; ++i) out.push_back(lo + static_cast<double>(i) * step);
  if (std::abs(out.back() - hi) <= 1e-9 * std::max(1.0, std::abs(hi))) {
    out.back() = hi;
  }
  return out;
}

void SweepSpec::validate() const {
  (void)range.grid();
  if (options.size() < 2) {
    throw Error(ErrorCode::InsufficientOptions, "a sweep needs at least two options, got " +
                                                    std::to_string(options.size()));
  }
}

double sweep_value(const SweepSpec& spec, const SweepOption& option, double param) {
  if (spec.kind == SweepKind::DesirabilityRisk) {
    DecisionPolicy policy;
    policy.w_desirability = param;
    policy.w_risk = 1.0 - param;
    return ebcr_score(option.desirability, option.risk, policy);
  }
  const auto benefit_scaling = spec.parameter == SweepParameter::Multiplier
                                   ? ScalingFunction{ScalingFunction::Kind::ThresholdMultiplier, spec.threshold, param}
                                   : ScalingFunction{ScalingFunction::Kind::ThresholdMultiplier, param, spec.multiplier};
  return desirability(option.benefit, option.cost, benefit_scaling, spec.cost_scaling,
                      DesirabilityMethod::ValueForCost, option.id)
      .estimated_desirability;
}

CrossoverReport sweep(const SweepSpec& spec) {
  spec.validate();
  const auto grid = spec.range.grid();

  auto options = spec.options;
  std::sort(options.begin(), options.end(), [](const auto& a, const auto& b) { return a.id < b.id; });

  CrossoverReport report;
  std::vector<std::vector<double>> values;
  for (const auto& o : options) {
    auto& series = report.series[o.id];
    values.emplace_back();
    for (double p : grid) {
      const double v = sweep_value(spec, o, p);
      series.emplace_back(p, v);
      values.back().push_back(v);
    }
  }

  for (std::size_t a = 0; a < options.size(); ++a) {
    for (std::size_t b = a + 1; b < options.size(); ++b) {
      auto diff = [&](double p) { return sweep_value(spec, options[a], p) - sweep_value(spec, options[b], p); };
      int last_sign = 0;
      std::size_t last_index = 0;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const int s = sign(values[a][i] - values[b][i]);
        if (s == 0) continue;
        if (last_sign != 0 && s != last_sign) {
          double lo = grid[last_index];
          double hi = grid[i];
          double root = 0.5 * (lo + hi);
          while (hi - lo > kBisectionTolerance) {
            root = 0.5 * (lo + hi);
            const int sm = sign(diff(root));
            if (sm == 0) break;
            (sm == last_sign ? lo : hi) = root;
            root = 0.5 * (lo + hi);
          }
          const auto& above = last_sign > 0 ? options[b].id : options[a].id;
          const auto& below = last_sign > 0 ? options[a].id : options[b].id;
          report.crossovers.push_back({options[a].id, options[b].id, root, below, above});
        }
        last_sign = s;
        last_index = i;
      }
    }
  }
  return report;
}

std::size_t emit_sweep_csv(const CrossoverReport& report, std::ostream& sink) {
  std::size_t rows = 0;
  sink << "option,param,value\n";
  for (const auto& [id, series] : report.series) {
    for (const auto& [p, v] : series) {
      sink << id << ',' << format_fixed(p, 6) << ',' << format_fixed(v, 6) << '\n';
      ++rows;
    }
  }
  for (const auto& c : report.crossovers) {
    sink << "# crossover," << c.option_a << ',' << c.option_b << ',' << format_fixed(c.param, 6) << '\n';
  }
  sink.flush();
  if (!sink) throw Error(ErrorCode::SinkWriteError, "failed to write sweep CSV");
  return rows;
}

}  // namespace bcr
