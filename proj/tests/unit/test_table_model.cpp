#include "doctest.h"
#include "helpers.hpp"

#include "bcr/builtin.hpp"
#include "bcr/table_model.hpp"

using namespace bcr;

TEST_CASE("table lookups") {
  const auto spec = iot_network();
  const auto& data = *spec.table_model;
  auto q = lookup_table_qualities(data, "C2", "Medium", "Medium");
  CHECK(q.at("energy") == 80.0);
  CHECK(q.at("packetLoss") == 6.0);
  CHECK(q.at("jammingPacketLoss") == 4.0);

  q = lookup_table_qualities(data, "C3", "Low", "Low");
  CHECK(q.at("energy") == 120.0);
  CHECK(q.at("packetLoss") == 1.0);

  q = lookup_table_qualities(data, "C4", "High", "High");
  CHECK(q.at("energy") == 30.0);
  CHECK(q.at("packetLoss") == 20.0);

  CHECK_THROWS_CODE(lookup_table_qualities(data, "C9", "Low", "Low"), ErrorCode::UnknownConfiguration);
  CHECK_THROWS_CODE(lookup_table_qualities(data, "C1", "Extreme", "Low"), ErrorCode::MissingAttribute);
}

TEST_CASE("table adaptation costs") {
  const auto spec = iot_network();
  const auto& data = *spec.table_model;
  CHECK(table_adaptation_cost(data, "C2", "C1").estimated_cost == 5.0);   // power only, S1
  CHECK(table_adaptation_cost(data, "C2", "C5").estimated_cost == 30.0);  // schedule only
  CHECK(table_adaptation_cost(data, "C2", "C4").estimated_cost == 40.0);  // both, into S2
  CHECK(table_adaptation_cost(data, "C5", "C1").estimated_cost == 20.0);  // both, into S1
  CHECK(table_adaptation_cost(data, "C5", "C2").estimated_cost == 15.0);
  CHECK(table_adaptation_cost(data, "C3", "C3").estimated_cost == 0.0);

  auto broken = data;
  broken.schedule_switch_cost.clear();
  CHECK_THROWS_CODE(table_adaptation_cost(broken, "C2", "C5"), ErrorCode::MissingCostEntry);
  CHECK_THROWS_CODE(broken.validate(), ErrorCode::InvalidModel);
}

TEST_CASE("configurations from the table") {
  const auto spec = iot_network();
  const auto& data = *spec.table_model;
  CHECK(data.all_configurations().size() == 6);
  const auto c5 = data.configuration("C5");
  CHECK(c5.bindings.at("power") == "medium");
  CHECK(c5.bindings.at("schedule") == "S2");
  CHECK_NOTHROW(data.validate());
  auto missing = data;
  missing.configurations[0].noise_loss.erase("High");
  CHECK_THROWS_CODE(missing.validate(), ErrorCode::InvalidModel);
}
