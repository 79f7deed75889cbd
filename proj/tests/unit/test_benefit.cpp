#include "doctest.h"
#include "helpers.hpp"

#include <algorithm>

#include "bcr/benefit.hpp"
#include "bcr/builtin.hpp"

using namespace bcr;

namespace {

std::vector<AdaptationGoal> worked_goals() {
  return {{ehealth_failure_curve(), 0.7, std::nullopt}, {ehealth_resource_curve(), 0.3, std::nullopt}};
}

QualityMap utilities(double f, double r) { return {{"failureRate", f}, {"resourceUsage", r}}; }

}  // namespace

TEST_CASE("default failure-rate curve") {
  const auto f = ehealth_failure_curve();
  CHECK(f(1.5) == 65.0);
  CHECK(f(0.5) == 100.0);
  CHECK(f(2.5) == 0.0);
  CHECK(f(2.0) == 30.0);
  CHECK(f(-1.0) == 100.0);
  CHECK(eval_utility_curve(f, 1.0) == 100.0);
}

TEST_CASE("default resource curve meets every anchor") {
  const auto r = ehealth_resource_curve();
  CHECK(r(3) == 100.0);
  CHECK(r(15) == 50.0);
  CHECK(r(18) == 50.0);
  CHECK(r(40) == 0.0);
  CHECK(r(7.5) == doctest::Approx(75.0));
}

TEST_CASE("curves reject malformed points") {
  CHECK_THROWS_CODE(UtilityResponseCurve("a", {{0, 100}}), ErrorCode::InvalidModel);
  CHECK_THROWS_CODE(UtilityResponseCurve("a", {{0, 100}, {0, 50}}), ErrorCode::InvalidModel);
  CHECK_THROWS_CODE(UtilityResponseCurve("a", {{1, 100}, {0, 50}}), ErrorCode::InvalidModel);
  CHECK_THROWS_CODE(UtilityResponseCurve("a", {{0, 101}, {1, 50}}), ErrorCode::InvalidModel);
}

TEST_CASE("estimated benefit of the worked options") {
  const auto goals = worked_goals();
  const auto current = utilities(65, 50);
  CHECK(estimated_benefit(utilities(100, 50), current, goals) == 24.5);
  CHECK(estimated_benefit(utilities(85, 100), current, goals) == 29.0);
  CHECK(estimated_benefit(current, current, goals) == 0.0);
  CHECK_THROWS_CODE(estimated_benefit({{"failureRate", 1}}, current, goals), ErrorCode::MissingAttribute);
  CHECK_THROWS_CODE(estimated_benefit(current, {{"resourceUsage", 1}}, goals), ErrorCode::MissingAttribute);
}

TEST_CASE("goal weights must sum to one") {
  auto goals = worked_goals();
  CHECK_NOTHROW(validate_goals(goals));
  goals[0].weight = 0.6;
  CHECK_THROWS_CODE(validate_goals(goals), ErrorCode::InvalidModel);
}

TEST_CASE("goal floors flag violations") {
  auto goals = worked_goals();
  goals[0].floor = 70.0;
  CHECK(violates_goals(utilities(65, 100), goals));
  CHECK_FALSE(violates_goals(utilities(70, 0), goals));
}

TEST_CASE("option qualities from the simulator") {
  using K = WorkflowNode::Kind;
  const ServiceCatalog catalog({{"P", SlaTier::Gold, DataPolicy::StoredLocal}},
                               {{"a", "A", "P", 0.0, 5}, {"b", "B", "P", 0.0, 6}, {"c", "C", "P", 0.0, 2}});
  WorkflowModel w{"n1",
                  {{"n1", K::Invoke, "A", "n2", {}}, {"n2", K::Invoke, "B", "n3", {}}, {"n3", K::Invoke, "C", "", {}}},
                  true};
  const Configuration option{"o", {{"A", "a"}, {"B", "b"}, {"C", "c"}}, std::nullopt};
  const auto q = estimate_option_qualities(option, w, catalog, {}, {});
  CHECK(q.at("failureRate") == 0.0);
  CHECK(q.at("resourceUsage") == 13.0);
}

TEST_CASE("property: curve outputs stay within the utility range and hit declared points") {
  testgen::Gen gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<UtilityResponseCurve::Point> pts;
    double x = gen.real(-5, 5);
    const int n = gen.integer(2, 6);
    for (int i = 0; i < n; ++i) {
      pts.emplace_back(x, gen.real(0, 100));
      x += gen.real(0.01, 3);
    }
    const UtilityResponseCurve c("q", pts);
    double lo = 100, hi = 0;
    for (const auto& [v, u] : pts) {
      CHECK(c(v) == u);
      lo = std::min(lo, u);
      hi = std::max(hi, u);
    }
    for (int k = 0; k < 20; ++k) {
      const double u = c(gen.real(pts.front().first - 2, pts.back().first + 2));
      CHECK(u >= lo);
      CHECK(u <= hi);
    }
  }
}

TEST_CASE("property: benefit is linear, zero on equal inputs and bounded") {
  testgen::Gen gen(12);
  std::vector<AdaptationGoal> goals;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
    const auto w = gen.simplex(n);
    goals.clear();
    QualityMap cur, opt, scaled;
    const double c = gen.real(0.1, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string id = "q" + std::to_string(i);
      goals.push_back({UtilityResponseCurve(id, {{0, 0}, {1, 100}}), w[i], std::nullopt});
      cur[id] = gen.real(0, 100);
      opt[id] = gen.real(0, 100);
      scaled[id] = cur[id] + c * (opt[id] - cur[id]);
    }
    const double eb = estimated_benefit(opt, cur, goals);
    CHECK(estimated_benefit(cur, cur, goals) == 0.0);
    CHECK(eb >= -100.0 - 1e-9);
    CHECK(eb <= 100.0 + 1e-9);
    CHECK(estimated_benefit(scaled, cur, goals) == doctest::Approx(c * eb).epsilon(1e-9));
  }
}
