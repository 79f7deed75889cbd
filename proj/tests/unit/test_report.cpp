#include "doctest.h"
#include "helpers.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bcr/builtin.hpp"
#include "bcr/format.hpp"
#include "bcr/report.hpp"

using namespace bcr;

TEST_CASE("fixed formatting rounds the printed value half away from zero") {
  CHECK(format_fixed(6.125, 2) == "6.13");
  CHECK(format_fixed(29.0 / 6.0, 2) == "4.83");
  CHECK(format_fixed(2.165, 2) == "2.17");
  CHECK(format_fixed(-2.165, 2) == "-2.17");
  CHECK(format_fixed(1.2000000000000002, 4) == "1.2000");
  CHECK(format_fixed(0.0, 1) == "0.0");
  CHECK(format_fixed(-0.0001, 2) == "0.00");
  CHECK(format_fixed(3.0, 0) == "3");
}

TEST_CASE("JSON report") {
  const auto ev = evaluate(ehealth_worked());
  const auto j = evaluation_to_json(ev, "ehealth-worked");
  CHECK(j.at("scenario") == "ehealth-worked");
  CHECK(j.at("selected") == "C1");
  CHECK(j.at("noAdaptation") == false);
  CHECK(j.at("current").at("id") == "Cc");
  CHECK(j.at("current").at("er").is_null());
  REQUIRE(j.at("options").size() == 2);
  const auto& c1 = j.at("options")[0];
  CHECK(c1.at("id") == "C1");
  CHECK(c1.at("eb") == 24.5);
  CHECK(c1.at("ed") == 6.125);
  CHECK(c1.at("er") == 1.8);
  CHECK(j.at("options")[1].at("ed") == 4.8333);
  CHECK(c1.at("vetoed") == false);
  CHECK(j.at("scores").at("C1") == 2.1625);
}

TEST_CASE("CSV report") {
  const auto ev = evaluate(ehealth_worked());
  std::ostringstream out;
  write_evaluation_csv(ev, out);
  std::istringstream in(out.str());
  std::string header, row1, row2, extra;
  std::getline(in, header);
  std::getline(in, row1);
  std::getline(in, row2);
  CHECK(header == "option,eb,ec,ed,er,ebcr,vetoed,selected");
  CHECK(row1.rfind("C1,24.5000,4.0000,6.1250,1.8000,", 0) == 0);
  CHECK(row1.substr(row1.size() - 4) == "true");
  CHECK(row2.rfind("C2,", 0) == 0);
  CHECK_FALSE(std::getline(in, extra));
}

TEST_CASE("text report") {
  const auto ev = evaluate(ehealth_worked());
  std::ostringstream out;
  write_evaluation_text(ev, out);
  const auto text = out.str();
  CHECK(text.find("current: Cc") != std::string::npos);
  CHECK(text.find("6.13") != std::string::npos);
  CHECK(text.find("4.83") != std::string::npos);
  CHECK(text.find("selected: C1") != std::string::npos);

  std::ostringstream keep;
  auto u = iot_network().uncertainty;
  u.levels["jamming"] = "High";
  u.levels["noise"] = "High";
  const auto iot = iot_network();
  write_evaluation_text(evaluate(iot, iot.initial_configuration, u), keep);
  CHECK(keep.str().find("C2 (keep)") != std::string::npos);
  CHECK(keep.str().find("selected: no-change") != std::string::npos);
}

TEST_CASE("report formats and sinks") {
  CHECK(parse_report_format("json") == ReportFormat::Json);
  CHECK(parse_report_format("csv") == ReportFormat::Csv);
  CHECK(parse_report_format("text") == ReportFormat::Text);
  CHECK_FALSE(parse_report_format("xml"));

  const auto ev = evaluate(ehealth_worked());
  CHECK_THROWS_CODE(save_report(ev, "/nonexistent/dir/report.json", ReportFormat::Json), ErrorCode::SinkWriteError);
  const auto path = std::filesystem::temp_directory_path() / "bcr_report.json";
  save_report(ev, path, ReportFormat::Json);
  std::ifstream in(path);
  CHECK(nlohmann::json::parse(in).at("selected") == "C1");
  std::filesystem::remove(path);
}

TEST_CASE("sweep JSON") {
  SweepSpec spec;
  spec.range = {0.0, 1.0, 0.5};
  spec.options = {{"A", 0, 0, 1, 2}, {"B", 0, 0, 2, 1}};
  const auto j = sweep_to_json(sweep(spec));
  CHECK(j.at("series").at("A").size() == 3);
  CHECK(j.at("crossovers").is_array());
}
