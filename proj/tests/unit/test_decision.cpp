#include "doctest.h"
#include "helpers.hpp"

#include <algorithm>

#include "bcr/decision.hpp"

using namespace bcr;

namespace {

const Configuration kCurrent{"Cc", {{"r", "s0"}}, std::nullopt};

DecisionPolicy even() {
  DecisionPolicy p;
  p.w_desirability = 0.5;
  p.w_risk = 0.5;
  return p;
}

}  // namespace

TEST_CASE("worked options: C1 wins") {
  const Candidate triples[] = {{"C1", 6.125, 1.8}, {"C2", 29.0 / 6.0, 1.2}};
  const auto d = select(kCurrent, triples, even());
  CHECK(d.selected == "C1");
  CHECK_FALSE(d.no_adaptation);
  CHECK(d.scores.at("C1") == doctest::Approx(2.1625));
  CHECK(d.scores.at("C2") == doctest::Approx(29.0 / 12.0 - 0.6));
  REQUIRE(d.rationale.size() == 2);
  CHECK(d.rationale[0].option_id == "C1");
  CHECK(ebcr_score(6.125, 1.8, even()) == d.scores.at("C1"));
}

TEST_CASE("single option and empty input") {
  const Candidate one[] = {{"only", -3.0, 5.0}};
  CHECK(select(kCurrent, one, even()).selected == "only");
  CHECK_THROWS_CODE(select(kCurrent, std::span<const Candidate>{}, even()), ErrorCode::NoViableOption);
  auto baseline = even();
  baseline.include_current_as_baseline = true;
  CHECK_THROWS_CODE(select(kCurrent, std::span<const Candidate>{}, baseline, 1.0), ErrorCode::NoViableOption);
}

TEST_CASE("ties go to the smaller id") {
  const Candidate triples[] = {{"B", 2, 1}, {"A", 2, 1}, {"C", 1, 1}};
  CHECK(select(kCurrent, triples, even()).selected == "A");
}

TEST_CASE("duplicate ids are rejected") {
  const Candidate triples[] = {{"A", 2, 1}, {"A", 1, 1}};
  CHECK_THROWS_CODE(select(kCurrent, triples, even()), ErrorCode::InvalidModel);
}

TEST_CASE("the current configuration as baseline") {
  auto p = even();
  p.include_current_as_baseline = true;
  const Candidate poor[] = {{"A", 0.5, 3}};
  const auto keep = select(kCurrent, poor, p, 1.0);
  CHECK(keep.no_adaptation);
  CHECK(keep.selected == "Cc");
  CHECK(keep.scores.at("Cc") == -0.5);
  CHECK(std::any_of(keep.rationale.begin(), keep.rationale.end(), [](const auto& r) { return r.baseline; }));

  const Candidate good[] = {{"A", 4, 1}};
  CHECK(select(kCurrent, good, p, 1.0).selected == "A");
  CHECK_THROWS_CODE(select(kCurrent, good, p), ErrorCode::InvalidModel);
}

TEST_CASE("policy validation") {
  auto p = even();
  CHECK_NOTHROW(p.validate());
  p.w_desirability = 0.7;
  CHECK_THROWS_CODE(p.validate(), ErrorCode::InvalidModel);
  p.w_risk = 0.3;
  CHECK_NOTHROW(p.validate());
  p.w_desirability = 1.2;
  p.w_risk = -0.2;
  CHECK_THROWS_CODE(p.validate(), ErrorCode::InvalidModel);
}

TEST_CASE("property: argmax survives positive weight scaling, input scaling and ED shifts") {
  testgen::Gen gen(51);
  for (int i = 0; i < 300; ++i) {
    std::vector<Candidate> cs;
    const int n = gen.integer(1, 8);
    for (int k = 0; k < n; ++k) cs.push_back({"o" + std::to_string(k), gen.real(-10, 10), gen.real(1, 5)});
    DecisionPolicy p;
    p.w_desirability = gen.real(0, 1);
    p.w_risk = 1 - p.w_desirability;
    const auto base = select(kCurrent, cs, p).selected;

    auto shuffled = cs;
    gen.shuffle(shuffled);
    CHECK(select(kCurrent, shuffled, p).selected == base);

    // Scaling ED and ER by one factor scales every score alike.
    const double k = gen.real(0.5, 4);
    auto scaled = cs;
    for (auto& c : scaled) {
      c.desirability *= k;
      c.risk *= k;
    }
    const auto d = select(kCurrent, scaled, p);
    const auto s = select(kCurrent, cs, p).scores;
    const double best = s.at(base);
    // Only compare when the winner is clear of rounding noise.
    bool clear = true;
    for (const auto& [id, v] : s) clear = clear && (id == base || best - v > 1e-9);
    if (clear) CHECK(d.selected == base);

    // select scores with the weights as given, so a scaled pair ranks the same way.
    auto heavier = p;
    heavier.w_desirability *= k;
    heavier.w_risk *= k;
    if (clear) CHECK(select(kCurrent, cs, heavier).selected == base);

    const double shift = gen.real(-5, 5);
    auto moved = cs;
    for (auto& c : moved) c.desirability += shift;
    if (clear) CHECK(select(kCurrent, moved, p).selected == base);

    for (const auto& [id, v] : s) CHECK(v <= best);
  }
}
