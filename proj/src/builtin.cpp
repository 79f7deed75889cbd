#include "bcr/builtin.hpp"

namespace bcr {

namespace {

const std::vector<std::string> kRoles = {"MedicalAnalysis", "Drug", "Alarm"};

ServiceCatalog ehealth_catalog() {
  std::vector<ServiceProvider> providers = {
      {"SP1", SlaTier::Silver, DataPolicy::StoredWithPartners},
      {"SP2", SlaTier::Gold, DataPolicy::StoredLocal},
      {"SP3", SlaTier::Bronze, DataPolicy::SharedWithPartners},
  };
  // Fitted by tools/calibrate_ehealth.py against the reference anchors.
  std::vector<ConcreteService> services = {
      {"SP1-MAS", "MedicalAnalysis", "SP1", 0.005531, 2.294},
      {"SP1-DS", "Drug", "SP1", 0.015502, 0.971},
      {"SP1-AS", "Alarm", "SP1", 0.006038, 1.941},
      {"SP2-MAS", "MedicalAnalysis", "SP2", 0.002, 20.0},
      {"SP2-DS", "Drug", "SP2", 0.000724, 20.206},
      {"SP2-AS", "Alarm", "SP2", 0.00072, 20.206},
      {"SP3-MAS", "MedicalAnalysis", "SP3", 0.03, 30.0},
      {"SP3-DS", "Drug", "SP3", 0.02053, 30.97},
      {"SP3-AS", "Alarm", "SP3", 0.03, 30.0},
  };
  return ServiceCatalog(std::move(providers), std::move(services));
}

WorkflowModel ehealth_workflow() {
  using K = WorkflowNode::Kind;
  WorkflowModel w;
  w.entry = "start";
  w.nodes = {
      {"start", K::Choice, "", "", {{"sensorData", 0.8, "analysis"}, {"panicButton", 0.2, "alarmPanic"}}},
      {"analysis", K::Invoke, "MedicalAnalysis", "triage", {}},
      {"triage", K::Choice, "", "", {{"noAction", 0.25, ""}, {"changeDrug", 0.5, "drug"}, {"emergency", 0.25, "alarm"}}},
      {"drug", K::Invoke, "Drug", "", {}},
      {"alarm", K::Invoke, "Alarm", "", {}},
      {"alarmPanic", K::Invoke, "Alarm", "", {}},
  };
  return w;
}

CostModel ehealth_cost_model() {
  CostModel m;
  m.attributes.push_back({{"testing", CostType::Overhead, "Computation needed to test a newly bound service"}, 1.0});
  const std::vector<std::tuple<std::string, SlaTier, double, double, double>> rows = {
      {"SP1", SlaTier::Silver, 5, 6, 2},
      {"SP2", SlaTier::Gold, 3, 2, 2},
      {"SP3", SlaTier::Bronze, 8, 8, 4},
  };
  for (const auto& [provider, tier, mas, ds, as] : rows) {
    m.entries.push_back({"testing", provider, tier, "MedicalAnalysis", mas});
    m.entries.push_back({"testing", provider, tier, "Drug", ds});
    m.entries.push_back({"testing", provider, tier, "Alarm", as});
  }
  return m;
}

RiskAttributeModel data_confidentiality() {
  RiskAttributeModel a;
  a.id = "dataConfidentiality";
  a.weight = 0.2;
  a.source = RiskAttributeModel::Source::ServiceTiers;
  a.matrix = RiskMatrix::default_4x4();
  a.table.rows = {
      {"Gold", {1.0 / 3.0, 1, "rarely", "negligible effect"}},
      {"Silver", {2.0 / 3.0, 2, "possibly", "limited impact"}},
      {"Bronze", {3.0 / 3.0, 3, "likely", "sensitive data loss"}},
      {"Unlabeled", {4.0 / 3.0, 4, "almost certain", "significant impact"}},
  };
  return a;
}

std::vector<AdaptationGoal> ehealth_goals() {
  return {{ehealth_failure_curve(), 0.7, std::nullopt}, {ehealth_resource_curve(), 0.3, std::nullopt}};
}

Configuration ehealth_current() {
  Configuration c;
  c.id = "Cc";
  c.bindings = {{"MedicalAnalysis", "SP1-MAS"}, {"Drug", "SP3-DS"}, {"Alarm", "SP1-AS"}};
  c.observed_qualities = QualityMap{{std::string(kFailureRate), 1.5}, {std::string(kResourceUsage), 15.0}};
  return c;
}

}  // namespace

UtilityResponseCurve ehealth_failure_curve() {
  return UtilityResponseCurve(std::string(kFailureRate), {{0, 100}, {1, 100}, {2, 30}, {2.0001, 0}});
}

UtilityResponseCurve ehealth_resource_curve() {
  return UtilityResponseCurve(std::string(kResourceUsage), {{0, 100}, {5, 100}, {10, 50}, {20, 50}, {30, 0}});
}

ScenarioSpec ehealth_default() {
  ScenarioSpec s;
  s.name = "ehealth";
  s.roles = kRoles;
  s.catalog = ehealth_catalog();
  s.workflow = ehealth_workflow();
  s.goals = ehealth_goals();
  s.cost_model = ehealth_cost_model();

  RiskAttributeModel health;
  health.id = "patientHealth";
  health.weight = 0.8;
  health.source = RiskAttributeModel::Source::ServiceTiers;
  health.matrix = RiskMatrix::default_4x4();
  health.rated_roles = {"MedicalAnalysis", "Alarm"};
  // Illustrative: how a provider's reliability commitment bears on patients.
  health.table.rows = {
      {"Gold", {1.0 / 3.0, 2, "rarely", "limited harm"}},
      {"Silver", {2.0 / 3.0, 2, "possibly", "limited harm"}},
      {"Bronze", {3.0 / 3.0, 3, "likely", "serious harm"}},
      {"Unlabeled", {4.0 / 3.0, 4, "almost certain", "critical harm"}},
  };
  s.risk_model.attributes = {data_confidentiality(), health};

  s.decision.w_desirability = 0.5;
  s.decision.w_risk = 0.5;
  s.initial_configuration = ehealth_current();
  s.space_mode = SpaceMode::Cartesian;
  return s;
}

ScenarioSpec ehealth_worked() {
  ScenarioSpec s;
  s.name = "ehealth-worked";
  s.roles = kRoles;
  s.catalog = ehealth_catalog();
  s.workflow = ehealth_workflow();
  s.goals = ehealth_goals();
  s.cost_model = ehealth_cost_model();

  RiskAttributeModel health;
  health.id = "patientHealth";
  health.weight = 0.8;
  health.source = RiskAttributeModel::Source::External;
  health.matrix = RiskMatrix::default_4x4();
  health.levels = {{"C1", 2}, {"C2", 1}};
  s.risk_model.attributes = {data_confidentiality(), health};

  s.decision.w_desirability = 0.5;
  s.decision.w_risk = 0.5;
  s.initial_configuration = ehealth_current();
  s.space_mode = SpaceMode::Explicit;
  s.explicit_space = {
      {"C1", {{"MedicalAnalysis", "SP1-MAS"}, {"Drug", "SP2-DS"}, {"Alarm", "SP2-AS"}}, std::nullopt},
      {"C2", {{"MedicalAnalysis", "SP1-MAS"}, {"Drug", "SP1-DS"}, {"Alarm", "SP1-AS"}}, std::nullopt},
  };
  // Utilities as reported for the options; C2's failure utility is not on the default curve.
  s.utility_overrides = {
      {"C1", {{std::string(kFailureRate), 100}, {std::string(kResourceUsage), 50}}},
      {"C2", {{std::string(kFailureRate), 85}, {std::string(kResourceUsage), 100}}},
  };
  return s;
}

ScenarioSpec iot_network() {
  TableScenarioData t;
  t.levels = {"Low", "Medium", "High"};
  auto row = [](std::string id, std::string power, std::string schedule, double energy, double n1, double n2,
                double n3, double j1, double j2, double j3) {
    return TableConfiguration{std::move(id),
                              std::move(power),
                              std::move(schedule),
                              energy,
                              {{"Low", n1}, {"Medium", n2}, {"High", n3}},
                              {{"Low", j1}, {"Medium", j2}, {"High", j3}}};
  };
  t.configurations = {
      row("C1", "low", "S1", 40, 2, 4, 6, 3, 6, 9),   row("C2", "medium", "S1", 80, 1, 2, 3, 2, 4, 6),
      row("C3", "high", "S1", 120, 0, 0, 1, 1, 2, 3), row("C4", "low", "S2", 30, 3, 6, 8, 4, 8, 12),
      row("C5", "medium", "S2", 60, 2, 3, 4, 3, 6, 8), row("C6", "high", "S2", 90, 1, 1, 2, 2, 3, 4),
  };
  t.power_change_cost = {{"S1", 5}, {"S2", 10}};
  t.schedule_switch_cost = {{{"S1", "S2"}, 30}, {{"S2", "S1"}, 15}};

  ScenarioSpec s;
  s.name = "iot-network";
  s.roles = {std::string(kPowerRole), std::string(kScheduleRole)};
  s.goals = {
      {UtilityResponseCurve(std::string(kPacketLoss), {{0, 100}, {10, 100}, {10.0001, 0}}), 0.5, 100.0},
      {UtilityResponseCurve(std::string(kEnergy), {{0, 100}, {100, 0}}), 0.5, std::nullopt},
  };

  RiskAttributeModel interruption;
  interruption.id = "serviceInterruption";
  interruption.weight = 1.0;
  interruption.source = RiskAttributeModel::Source::UncertaintyBands;
  interruption.matrix = RiskMatrix::default_3x3();
  interruption.uncertainty = "jamming";
  interruption.likelihood_by_level = {{"Low", 1}, {"Medium", 2}, {"High", 3}};
  interruption.quality = std::string(kJammingPacketLoss);
  interruption.bands = {{3.0, 1}, {6.0, 2}, {std::nullopt, 3}};
  s.risk_model.attributes = {interruption};

  // Benefit counts double against cost; risk takes 30% of the decision weight.
  s.decision.benefit_scaling = ScalingFunction::threshold_multiplier(0.0, 2.0);
  s.decision.w_desirability = 0.7;
  s.decision.w_risk = 0.3;
  s.decision.include_current_as_baseline = true;

  s.uncertainty.levels = {{"noise", "Medium"}, {"jamming", "Medium"}};
  s.initial_configuration = t.configuration("C2");
  s.space_mode = SpaceMode::Table;
  s.table_model = std::move(t);
  return s;
}

}  // namespace bcr
