#include "doctest.h"
#include "helpers.hpp"

#include <filesystem>
#include <fstream>

#include "bcr/builtin.hpp"
#include "bcr/engine.hpp"

using namespace bcr;
using nlohmann::json;

namespace {

json iot_fixture() {
  std::ifstream in(std::filesystem::path(BCR_SOURCE_DIR) / "tests" / "fixtures" / "iot_decisions.json");
  return json::parse(in);
}

}  // namespace

TEST_CASE("worked scenario end to end") {
  const auto ev = evaluate(ehealth_worked());
  REQUIRE(ev.options.size() == 2);
  const auto* c1 = ev.find("C1");
  const auto* c2 = ev.find("C2");
  REQUIRE(c1);
  REQUIRE(c2);
  CHECK(c1->benefit.estimated_benefit == 24.5);
  CHECK(c2->benefit.estimated_benefit == 29.0);
  CHECK(c1->cost.estimated_cost == 4.0);
  CHECK(c2->cost.estimated_cost == 6.0);
  CHECK(c1->desirability.estimated_desirability == 6.125);
  CHECK(c1->risk.estimated_risk == doctest::Approx(1.8));
  CHECK(c2->risk.estimated_risk == doctest::Approx(1.2));
  CHECK(ev.decision.selected == "C1");
  REQUIRE(ev.selected());
  CHECK(ev.selected()->id() == "C1");
  CHECK(ev.current_utilities.at("failureRate") == 65.0);
  CHECK(ev.current_utilities.at("resourceUsage") == 50.0);
  CHECK_FALSE(ev.current_risk);
}

TEST_CASE("option filters") {
  EvaluationOptions opts;
  opts.option_filter = {"C2"};
  const auto ev = evaluate(ehealth_worked(), opts);
  REQUIRE(ev.options.size() == 1);
  CHECK(ev.decision.selected == "C2");
  opts.option_filter = {"C7"};
  CHECK_THROWS_CODE(evaluate(ehealth_worked(), opts), ErrorCode::UnknownConfiguration);
}

TEST_CASE("the current configuration is not an adaptation") {
  const auto spec = ehealth_default();
  EvaluationOptions opts;
  opts.simulation.runs = 2'000;
  const auto ev = evaluate(spec, opts);
  CHECK(ev.options.size() == 26);
  for (const auto& o : ev.options) CHECK_FALSE(o.configuration.same_bindings(spec.initial_configuration));
}

TEST_CASE("parallel evaluation matches sequential evaluation") {
  const auto spec = ehealth_default();
  EvaluationOptions opts;
  opts.simulation.runs = 2'000;
  const auto seq = evaluate(spec, opts);
  opts.parallel = true;
  const auto par = evaluate(spec, opts);
  REQUIRE(seq.options.size() == par.options.size());
  for (std::size_t i = 0; i < seq.options.size(); ++i) {
    CHECK(seq.options[i].id() == par.options[i].id());
    CHECK(seq.options[i].benefit.estimated_benefit == par.options[i].benefit.estimated_benefit);
    CHECK(seq.options[i].risk.estimated_risk == par.options[i].risk.estimated_risk);
    CHECK(seq.options[i].score == par.options[i].score);
  }
  CHECK(seq.decision.selected == par.decision.selected);
  CHECK(seq.decision.scores == par.decision.scores);
}

TEST_CASE("vetoed options drop out of the decision") {
  auto spec = ehealth_worked();
  spec.risk_model.veto_threshold = 1.5;
  const auto ev = evaluate(spec);
  CHECK(ev.find("C1")->risk.vetoed);
  CHECK_FALSE(ev.find("C1")->score);
  CHECK(ev.decision.selected == "C2");
  CHECK(sweep_options(ev).size() == 1);

  spec.risk_model.veto_threshold = 1.0;
  CHECK_THROWS_CODE(evaluate(spec), ErrorCode::NoViableOption);
}

TEST_CASE("quality sources") {
  const auto spec = ehealth_default();
  // Observed values on the current configuration win over simulation.
  const auto cur = estimate_qualities(spec, spec.initial_configuration, spec.uncertainty, {});
  CHECK(cur.at("failureRate") == 1.5);
  CHECK(cur.at("resourceUsage") == 15.0);

  const auto iot = iot_network();
  const auto q = estimate_qualities(iot, find_configuration(iot, "C3"), iot.uncertainty, {});
  CHECK(q.at("energy") == 120.0);
  CHECK(q.at("packetLoss") == 2.0);

  const auto worked = ehealth_worked();
  const auto u = option_utilities(worked, "C2", {});
  CHECK(u.at("failureRate") == 85.0);
  CHECK(u.at("resourceUsage") == 100.0);
}

TEST_CASE("IoT decisions match the brute-force fixture") {
  const auto spec = iot_network();
  const auto fixture = iot_fixture();
  REQUIRE(fixture.at("cases").size() == 18);
  for (const auto& c : fixture.at("cases")) {
    const std::string noise = c.at("noise");
    const std::string jamming = c.at("jamming");
    const std::string current = c.at("current");
    CAPTURE(noise);
    CAPTURE(jamming);
    auto u = spec.uncertainty;
    u.levels["noise"] = noise;
    u.levels["jamming"] = jamming;
    EvaluationOptions opts;
    opts.option_filter = c.at("options").get<std::vector<std::string>>();
    const auto ev = evaluate(spec, find_configuration(spec, current), u, opts);

    CHECK(ev.decision.selected == c.at("selected").get<std::string>());
    CHECK(ev.decision.no_adaptation == c.at("noAdaptation").get<bool>());
    CHECK(ev.decision.scores.at(current) == doctest::Approx(c.at("keepScore").get<double>()).epsilon(1e-9));
    for (const auto& [id, row] : c.at("rows").items()) {
      const auto* o = ev.find(id);
      REQUIRE(o);
      CHECK(o->benefit.estimated_benefit == doctest::Approx(row.at("eb").get<double>()).epsilon(1e-9));
      CHECK(o->cost.estimated_cost == row.at("ec").get<double>());
      CHECK(o->desirability.estimated_desirability == doctest::Approx(row.at("ed").get<double>()).epsilon(1e-9));
      CHECK(o->risk.estimated_risk == row.at("er").get<double>());
      CHECK(ev.decision.scores.at(id) == doctest::Approx(row.at("score").get<double>()).epsilon(1e-9));
    }
  }
}

TEST_CASE("the current configuration competes as baseline when asked") {
  const auto ev = evaluate(iot_network());
  REQUIRE(ev.current_risk);
  CHECK(ev.current_risk->estimated_risk == 2.0);
  CHECK(ev.decision.selected == "C1");
}
