#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "json.hpp"

#include "bcr/engine.hpp"
#include "bcr/mape.hpp"
#include "bcr/tradeoff.hpp"

namespace bcr {

enum class ReportFormat { Json, Csv, Text };

std::optional<ReportFormat> parse_report_format(std::string_view text);

/// Numbers rounded to 4 decimals.
nlohmann::json evaluation_to_json(const Evaluation& ev, std::string_view scenario_name = {});
/// Header option,eb,ec,ed,er,ebcr,vetoed,selected; 4-decimal fixed values.
void write_evaluation_csv(const Evaluation& ev, std::ostream& out);
/// Human-readable table at 2-decimal display precision.
void write_evaluation_text(const Evaluation& ev, std::ostream& out);

void write_report(const Evaluation& ev, ReportFormat format, std::ostream& out, std::string_view scenario_name = {});
/// Throws SinkWriteError when the file cannot be written.
void save_report(const Evaluation& ev, const std::filesystem::path& path, ReportFormat format,
                 std::string_view scenario_name = {});
void save_report(const EpisodeLog& log, const std::filesystem::path& path);

nlohmann::json sweep_to_json(const CrossoverReport& report);

}  // namespace bcr
