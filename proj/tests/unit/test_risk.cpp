#include "doctest.h"
#include "helpers.hpp"

#include <algorithm>

#include "bcr/builtin.hpp"
#include "bcr/risk.hpp"

using namespace bcr;

namespace {

Configuration config(std::string id, std::string mas, std::string ds, std::string as) {
  return {std::move(id), {{"MedicalAnalysis", std::move(mas)}, {"Drug", std::move(ds)}, {"Alarm", std::move(as)}},
          std::nullopt};
}

const RiskAttributeModel& attribute(const RiskModel& m, std::string_view id) {
  return *std::find_if(m.attributes.begin(), m.attributes.end(), [&](const auto& a) { return a.id == id; });
}

}  // namespace

TEST_CASE("data confidentiality ratings by SLA tier") {
  const auto spec = ehealth_worked();
  const auto& table = attribute(spec.risk_model, "dataConfidentiality").table;
  CHECK(table.rate("Gold").likelihood == doctest::Approx(1.0 / 3.0));
  CHECK(table.rate("Gold").consequence == 1);
  CHECK(table.rate("Silver").likelihood == doctest::Approx(2.0 / 3.0));
  CHECK(table.rate("Silver").consequence == 2);
  CHECK(table.rate("Bronze").likelihood == 1.0);
  CHECK(table.rate("Bronze").consequence == 3);
  CHECK(table.rate("Unlabeled").consequence == 4);
  CHECK_THROWS_CODE(table.rate("Platinum"), ErrorCode::UnratedTier);

  const auto& s = spec.catalog.service("SP2-DS");
  const auto [l, c] = rate_service(s, spec.catalog.provider_of(s), table);
  CHECK(l == doctest::Approx(1.0 / 3.0));
  CHECK(c == 1);
  CHECK_THROWS_CODE(rate_service(s, spec.catalog.providers().front(), table), ErrorCode::InvalidModel);
}

TEST_CASE("combining ratings") {
  const double c2[] = {2.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0};
  const double c1[] = {2.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  CHECK(combine_likelihood(c2, 4) == 2);
  CHECK(combine_likelihood(c1, 4) == 1);
  const double many[] = {1, 1, 1, 1, 1};
  CHECK(combine_likelihood(many, 4) == 4);
  const double tiny[] = {0.1};
  CHECK(combine_likelihood(tiny, 4) == 1);
  const double half[] = {1.5};
  CHECK(combine_likelihood(half, 4, Rounding::HalfUp) == 2);
  CHECK(combine_likelihood(half, 4, Rounding::HalfDown) == 1);
  CHECK(combine_likelihood(half, 4, Rounding::HalfEven) == 2);
  const double two_half[] = {2.5};
  CHECK(combine_likelihood(two_half, 4, Rounding::HalfEven) == 2);
  CHECK_THROWS_CODE(combine_likelihood(std::span<const double>{}, 4), ErrorCode::EmptyRatings);

  const int cons[] = {2, 1, 1};
  CHECK(combine_consequence(cons) == 2);
  CHECK_THROWS_CODE(combine_consequence(std::span<const int>{}), ErrorCode::EmptyRatings);
}

TEST_CASE("matrix lookups") {
  const auto m = RiskMatrix::default_4x4();
  CHECK(matrix_lookup(m, 2, 2) == 2);
  CHECK(matrix_lookup(m, 1, 2) == 1);
  CHECK(matrix_lookup(m, 4, 4) == 5);
  CHECK(matrix_lookup(m, 1, 1) == 1);
  CHECK_THROWS_CODE(m.lookup(0, 1), ErrorCode::OutOfAxis);
  CHECK_THROWS_CODE(m.lookup(1, 5), ErrorCode::OutOfAxis);
  CHECK(RiskMatrix::default_3x3().lookup(3, 3) == 3);
  CHECK_THROWS_CODE(RiskMatrix({{1, 2}, {1}}), ErrorCode::InvalidModel);
}

TEST_CASE("overall risk of the worked options") {
  const auto spec = ehealth_worked();
  const RiskContext ctx{&spec.catalog, nullptr, nullptr};
  const auto r1 = estimate_risk(config("C1", "SP1-MAS", "SP2-DS", "SP2-AS"), spec.risk_model, ctx);
  const auto r2 = estimate_risk(config("C2", "SP1-MAS", "SP1-DS", "SP1-AS"), spec.risk_model, ctx);

  const auto& d1 = r1.per_attribute.at("dataConfidentiality");
  CHECK(d1.likelihood == 1);
  CHECK(d1.consequence == 2);
  CHECK(d1.level == 1);
  const auto& d2 = r2.per_attribute.at("dataConfidentiality");
  CHECK(d2.likelihood == 2);
  CHECK(d2.consequence == 2);
  CHECK(d2.level == 2);

  CHECK(r1.per_attribute.at("patientHealth").level == 2);
  CHECK(r1.per_attribute.at("patientHealth").supplied);
  CHECK(r1.estimated_risk == doctest::Approx(1.8).epsilon(1e-12));
  CHECK(r2.estimated_risk == doctest::Approx(1.2).epsilon(1e-12));

  // Levels supplied by the caller win over every source.
  const std::map<std::string, int> supplied = {{"patientHealth", 4}, {"dataConfidentiality", 1}};
  CHECK(estimate_risk(config("C2", "SP1-MAS", "SP1-DS", "SP1-AS"), spec.risk_model, ctx, &supplied).estimated_risk ==
        doctest::Approx(3.4));

  CHECK_THROWS_CODE(estimate_risk(config("C9", "SP1-MAS", "SP1-DS", "SP1-AS"), spec.risk_model, ctx),
                    ErrorCode::MissingRiskLevel);
}

TEST_CASE("tier-rated health risk on selected roles") {
  const auto spec = ehealth_default();
  const RiskContext ctx{&spec.catalog, nullptr, nullptr};
  // Only MedicalAnalysis and Alarm are rated: Silver + Gold -> LC round(1) = 1, CC 2.
  const auto r = estimate_risk(config("x", "SP1-MAS", "SP3-DS", "SP2-AS"), spec.risk_model, ctx);
  const auto& h = r.per_attribute.at("patientHealth");
  CHECK(h.likelihood == 1);
  CHECK(h.consequence == 2);
  CHECK(h.level == 1);
}

TEST_CASE("banded risk from an uncertainty level") {
  const auto spec = iot_network();
  const auto& a = attribute(spec.risk_model, "serviceInterruption");
  UncertaintyState u;
  u.levels = {{"noise", "Medium"}, {"jamming", "High"}};
  const QualityMap q = {{"jammingPacketLoss", 6.0}};
  const Configuration c{"C1", {{"power", "low"}, {"schedule", "S1"}}, std::nullopt};
  RiskModel m;
  m.attributes = {a};
  const auto r = estimate_risk(c, m, RiskContext{nullptr, &u, &q});
  CHECK(r.per_attribute.at(a.id).likelihood == 3);
  CHECK(r.per_attribute.at(a.id).consequence == 2);
  CHECK(r.estimated_risk == 3.0);
  const QualityMap none;
  CHECK_THROWS_CODE(estimate_risk(c, m, RiskContext{nullptr, &u, &none}), ErrorCode::MissingAttribute);
}

TEST_CASE("veto keeps estimates within the threshold") {
  std::vector<RiskEstimate> es = {{"C1", {}, 1.8, false}, {"C2", {}, 1.2, false}};
  const auto kept = risk_veto(es, 1.5);
  REQUIRE(kept.size() == 1);
  CHECK(kept[0].option_id == "C2");
  CHECK(risk_veto(es, 1.8).size() == 2);
  CHECK(risk_veto(es, 1.0).empty());
}

TEST_CASE("risk model validation") {
  auto m = ehealth_worked().risk_model;
  CHECK_NOTHROW(m.validate());
  m.attributes[0].weight = 0.3;
  CHECK_THROWS_CODE(m.validate(), ErrorCode::InvalidModel);
  CHECK_THROWS_CODE(RiskMatrix({{2, 1}, {1, 2}}), ErrorCode::InvalidModel);
  m = ehealth_worked().risk_model;
  m.attributes[0].matrix = RiskMatrix::default_3x3();  // table rates consequence 4
  CHECK_THROWS_CODE(m.validate(), ErrorCode::InvalidModel);
}

TEST_CASE("property: combinators ignore rating order") {
  testgen::Gen gen(41);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
    std::vector<double> ls;
    std::vector<int> cs;
    for (std::size_t k = 0; k < n; ++k) {
      ls.push_back(gen.integer(1, 4) / 3.0);
      cs.push_back(gen.integer(1, 4));
    }
    const int l = combine_likelihood(ls, 4);
    const int c = combine_consequence(cs);
    auto ls2 = ls;
    auto cs2 = cs;
    gen.shuffle(ls2);
    gen.shuffle(cs2);
    CHECK(combine_likelihood(ls2, 4) == l);
    CHECK(combine_consequence(cs2) == c);
    CHECK(l >= 1);
    CHECK(l <= 4);
  }
}

TEST_CASE("property: default matrices are monotone in both axes") {
  for (const auto& m : {RiskMatrix::default_4x4(), RiskMatrix::default_3x3()}) {
    for (int l = 1; l <= m.likelihood_levels(); ++l) {
      for (int c = 1; c <= m.consequence_levels(); ++c) {
        if (l > 1) CHECK(m.lookup(l, c) >= m.lookup(l - 1, c));
        if (c > 1) CHECK(m.lookup(l, c) >= m.lookup(l, c - 1));
      }
    }
  }
}

TEST_CASE("property: overall risk lies between the smallest and largest level") {
  testgen::Gen gen(42);
  for (int i = 0; i < 300; ++i) {
    RiskModel m;
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
    const auto w = gen.simplex(n);
    std::map<std::string, int> levels;
    for (std::size_t k = 0; k < n; ++k) {
      RiskAttributeModel a;
      a.id = "a" + std::to_string(k);
      a.weight = w[k];
      a.source = RiskAttributeModel::Source::External;
      a.matrix = RiskMatrix::default_4x4();
      m.attributes.push_back(a);
      levels[a.id] = gen.integer(1, 5);
    }
    const auto r = estimate_risk({"o", {}, std::nullopt}, m, {}, &levels);
    int lo = 5, hi = 1;
    for (const auto& [id, lv] : levels) {
      lo = std::min(lo, lv);
      hi = std::max(hi, lv);
    }
    CHECK(r.estimated_risk >= lo - 1e-9);
    CHECK(r.estimated_risk <= hi + 1e-9);
  }
}

TEST_CASE("property: veto returns an order-preserving subset and is idempotent") {
  testgen::Gen gen(43);
  for (int i = 0; i < 300; ++i) {
    std::vector<RiskEstimate> es;
    const int n = gen.integer(0, 8);
    for (int k = 0; k < n; ++k) es.push_back({"o" + std::to_string(k), {}, gen.real(1, 5), false});
    const double t = gen.real(1, 5);
    const auto kept = risk_veto(es, t);
    CHECK(kept.size() <= es.size());
    std::size_t j = 0;
    for (const auto& e : es) {
      if (e.estimated_risk <= t) {
        REQUIRE(j < kept.size());
        CHECK(kept[j++].option_id == e.option_id);
      }
    }
    CHECK(j == kept.size());
    const auto again = risk_veto(kept, t);
    CHECK(again.size() == kept.size());
  }
}
