#include "bcr/report.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>

#include "bcr/error.hpp"
#include "bcr/format.hpp"

namespace bcr {

using nlohmann::json;

namespace {

double round4(double v) { return std::stod(format_fixed(v, 4)); }

json rounded(const QualityMap& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[k] = round4(v);
  return out;
}

json risk_to_json(const RiskEstimate& r) {
  json attributes = json::object();
  for (const auto& [id, a] : r.per_attribute) {
    json row = {{"level", a.level}, {"supplied", a.supplied}};
    if (a.likelihood) row["likelihood"] = *a.likelihood;
    if (a.consequence) row["consequence"] = *a.consequence;
    attributes[id] = std::move(row);
  }
  return attributes;
}

std::ofstream open_sink(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::SinkWriteError, "cannot open '" + path.string() + "' for writing");
  return out;
}

void finish(std::ostream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorCode::SinkWriteError, "failed writing '" + path.string() + "'");
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  if (text == "text") return ReportFormat::Text;
  return std::nullopt;
}

json evaluation_to_json(const Evaluation& ev, std::string_view scenario_name) {
  json options = json::array();
  for (const auto& o : ev.options) {
    options.push_back({{"id", o.id()},
                       {"bindings", o.configuration.bindings},
                       {"qualities", rounded(o.benefit.per_attribute_value)},
                       {"utilities", rounded(o.benefit.per_attribute_utility)},
                       {"eb", round4(o.benefit.estimated_benefit)},
                       {"ec", round4(o.cost.estimated_cost)},
                       {"ed", round4(o.desirability.estimated_desirability)},
                       {"er", round4(o.risk.estimated_risk)},
                       {"ebcr", o.score ? json(round4(*o.score)) : json(nullptr)},
                       {"vetoed", o.risk.vetoed},
                       {"risk", risk_to_json(o.risk)}});
  }
  json rationale = json::array();
  for (const auto& r : ev.decision.rationale) {
    rationale.push_back({{"option", r.option_id},
                         {"ed", round4(r.desirability)},
                         {"er", round4(r.risk)},
                         {"score", round4(r.score)},
                         {"baseline", r.baseline}});
  }
  json scores = json::object();
  for (const auto& [id, s] : ev.decision.scores) scores[id] = round4(s);

  json out = {{"current",
               {{"id", ev.current.id},
                {"bindings", ev.current.bindings},
                {"qualities", rounded(ev.current_qualities)},
                {"utilities", rounded(ev.current_utilities)},
                {"er", ev.current_risk ? json(round4(ev.current_risk->estimated_risk)) : json(nullptr)}}},
              {"selected", ev.decision.selected},
              {"noAdaptation", ev.decision.no_adaptation},
              {"scores", std::move(scores)},
              {"options", std::move(options)},
              {"rationale", std::move(rationale)}};
  if (!scenario_name.empty()) out["scenario"] = std::string(scenario_name);
  return out;
}

void write_evaluation_csv(const Evaluation& ev, std::ostream& out) {
  out << "option,eb,ec,ed,er,ebcr,vetoed,selected\n";
  for (const auto& o : ev.options) {
    out << o.id() << ',' << format_fixed(o.benefit.estimated_benefit, 4) << ','
        << format_fixed(o.cost.estimated_cost, 4) << ',' << format_fixed(o.desirability.estimated_desirability, 4)
        << ',' << format_fixed(o.risk.estimated_risk, 4) << ',' << (o.score ? format_fixed(*o.score, 4) : "") << ','
        << (o.risk.vetoed ? "true" : "false") << ',' << (o.id() == ev.decision.selected ? "true" : "false") << '\n';
  }
}

void write_evaluation_text(const Evaluation& ev, std::ostream& out) {
  out << "current: " << ev.current.id << '\n';
  out << std::left << std::setw(28) << "option" << std::right << std::setw(10) << "EB" << std::setw(10) << "EC"
      << std::setw(10) << "ED" << std::setw(10) << "ER" << std::setw(10) << "EBCR" << '\n';
  for (const auto& o : ev.options) {
    out << std::left << std::setw(28) << o.id() << std::right << std::setw(10)
        << format_fixed(o.benefit.estimated_benefit, 2) << std::setw(10) << format_fixed(o.cost.estimated_cost, 2)
        << std::setw(10) << format_fixed(o.desirability.estimated_desirability, 2) << std::setw(10)
        << format_fixed(o.risk.estimated_risk, 2) << std::setw(10)
        << (o.score ? format_fixed(*o.score, 2) : std::string("vetoed")) << '\n';
  }
  for (const auto& r : ev.decision.rationale) {
    if (!r.baseline) continue;
    out << std::left << std::setw(28) << (r.option_id + " (keep)") << std::right << std::setw(10) << "-"
        << std::setw(10) << "-" << std::setw(10) << format_fixed(r.desirability, 2) << std::setw(10)
        << format_fixed(r.risk, 2) << std::setw(10) << format_fixed(r.score, 2) << '\n';
  }
  out << "selected: " << (ev.decision.no_adaptation ? std::string(kNoChange) : ev.decision.selected) << '\n';
}

void write_report(const Evaluation& ev, ReportFormat format, std::ostream& out, std::string_view scenario_name) {
  switch (format) {
    case ReportFormat::Json: out << evaluation_to_json(ev, scenario_name).dump(2) << '\n'; break;
    case ReportFormat::Csv: write_evaluation_csv(ev, out); break;
    case ReportFormat::Text: write_evaluation_text(ev, out); break;
  }
}

void save_report(const Evaluation& ev, const std::filesystem::path& path, ReportFormat format,
                 std::string_view scenario_name) {
  auto out = open_sink(path);
  write_report(ev, format, out, scenario_name);
  finish(out, path);
}

void save_report(const EpisodeLog& log, const std::filesystem::path& path) {
  auto out = open_sink(path);
  write_jsonl(log, out);
  finish(out, path);
}

json sweep_to_json(const CrossoverReport& report) {
  json series = json::object();
  for (const auto& [id, points] : report.series) {
    json rows = json::array();
    for (const auto& [p, v] : points) rows.push_back({p, v});
    series[id] = std::move(rows);
  }
  json crossovers = json::array();
  for (const auto& c : report.crossovers) {
    crossovers.push_back({{"optionA", c.option_a},
                          {"optionB", c.option_b},
                          {"param", c.param},
                          {"preferredBelow", c.preferred_below},
                          {"preferredAbove", c.preferred_above}});
  }
  return {{"series", std::move(series)}, {"crossovers", std::move(crossovers)}};
}

}  // namespace bcr
