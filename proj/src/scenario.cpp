#include "bcr/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>

#include "bcr/error.hpp"

namespace bcr {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Reading with JSON-pointer paths

[[noreturn]] void parse_fail(const std::string& path, const std::string& msg) {
  throw DocumentError(ErrorCode::ParseError, path, msg);
}

[[noreturn]] void invalid(const std::string& path, const std::string& msg) {
  throw DocumentError(ErrorCode::ValidationError, path, msg);
}

std::string escape_key(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

class Node {
 public:
  Node(const json& value, std::string path) : value_(&value), path_(std::move(path)) {}

  const std::string& path() const { return path_; }
  const json& raw() const { return *value_; }

  bool has(const char* key) const { return value_->is_object() && value_->contains(key) && !(*value_)[key].is_null(); }

  Node at(const char* key) const {
    expect_object();
    if (!has(key)) parse_fail(path_ + "/" + key, "missing required field");
    return {(*value_)[key], path_ + "/" + escape_key(key)};
  }

  std::optional<Node> opt(const char* key) const {
    expect_object();
    if (!has(key)) return std::nullopt;
    return Node((*value_)[key], path_ + "/" + escape_key(key));
  }

  std::vector<Node> items() const {
    if (!value_->is_array()) parse_fail(path_, "expected an array");
    std::vector<Node> out;
    for (std::size_t i = 0; i < value_->size(); ++i) out.emplace_back((*value_)[i], path_ + "/" + std::to_string(i));
    return out;
  }

  std::vector<std::pair<std::string, Node>> members() const {
    expect_object();
    std::vector<std::pair<std::string, Node>> out;
    for (auto it = value_->begin(); it != value_->end(); ++it) {
      out.emplace_back(it.key(), Node(it.value(), path_ + "/" + escape_key(it.key())));
    }
    return out;
  }

  double number() const {
    if (!value_->is_number()) parse_fail(path_, "expected a number");
    return value_->get<double>();
  }

  int integer() const {
    if (!value_->is_number_integer()) parse_fail(path_, "expected an integer");
    return value_->get<int>();
  }

  std::uint64_t unsigned_integer() const {
    if (!value_->is_number_unsigned()) parse_fail(path_, "expected a non-negative integer");
    return value_->get<std::uint64_t>();
  }

  std::string str() const {
    if (!value_->is_string()) parse_fail(path_, "expected a string");
    return value_->get<std::string>();
  }

  bool boolean() const {
    if (!value_->is_boolean()) parse_fail(path_, "expected true or false");
    return value_->get<bool>();
  }

  /// A number, or a "p/q" fraction string.
  double fraction() const {
    if (value_->is_number()) return value_->get<double>();
    if (!value_->is_string()) parse_fail(path_, "expected a number or a 'p/q' fraction");
    const auto text = value_->get<std::string>();
    const auto slash = text.find('/');
    double num = 0.0;
    double den = 1.0;
    auto parse = [&](std::string_view s, double& out) {
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      return ec == std::errc{} && p == s.data() + s.size();
    };
    std::string_view view(text);
    bool ok = slash == std::string::npos ? parse(view, num)
                                         : parse(view.substr(0, slash), num) && parse(view.substr(slash + 1), den);
    if (!ok || den == 0.0) parse_fail(path_, "malformed fraction '" + text + "'");
    return num / den;
  }

 private:
  void expect_object() const {
    if (!value_->is_object()) parse_fail(path_, "expected an object");
  }

  const json* value_;
  std::string path_;
};

template <typename Fn>
auto at_path(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const DocumentError&) {
    throw;
  } catch (const Error& e) {
    invalid(path, e.message());
  }
}

std::map<std::string, double> number_map(const Node& node) {
  std::map<std::string, double> out;
  for (const auto& [k, v] : node.members()) out[k] = v.number();
  return out;
}

// ---------------------------------------------------------------------------
// Sections

ServiceProvider parse_provider(const Node& n) {
  ServiceProvider p;
  p.id = n.at("id").str();
  if (auto t = n.opt("slaTier")) {
    auto tier = parse_sla_tier(t->str());
    if (!tier) parse_fail(t->path(), "unknown SLA tier '" + t->str() + "'");
    p.sla_tier = *tier;
  }
  if (auto d = n.opt("dataPolicy")) {
    auto policy = parse_data_policy(d->str());
    if (!policy) parse_fail(d->path(), "unknown data policy '" + d->str() + "'");
    p.data_policy = *policy;
  }
  return p;
}

ConcreteService parse_service(const Node& n) {
  ConcreteService s;
  s.id = n.at("id").str();
  s.role = n.at("role").str();
  s.provider = n.at("provider").str();
  s.failure_probability = n.at("failureProbability").number();
  s.resource_usage = n.at("resourceUsage").number();
  return s;
}

WorkflowModel parse_workflow(const Node& n) {
  WorkflowModel w;
  w.entry = n.at("entry").str();
  if (auto a = n.opt("acyclic")) w.acyclic = a->boolean();
  for (const auto& item : n.at("nodes").items()) {
    WorkflowNode node;
    node.id = item.at("id").str();
    const auto kind = item.at("kind").str();
    if (kind == "invoke") {
      node.kind = WorkflowNode::Kind::Invoke;
      node.role = item.at("role").str();
      if (auto next = item.opt("next")) node.next = next->str();
    } else if (kind == "choice") {
      node.kind = WorkflowNode::Kind::Choice;
      for (const auto& o : item.at("outcomes").items()) {
        WorkflowOutcome outcome;
        outcome.id = o.at("id").str();
        outcome.probability = o.at("probability").number();
        if (auto next = o.opt("next")) outcome.next = next->str();
        node.outcomes.push_back(std::move(outcome));
      }
    } else {
      parse_fail(item.path() + "/kind", "expected 'invoke' or 'choice'");
    }
    w.nodes.push_back(std::move(node));
  }
  return w;
}

AdaptationGoal parse_goal(const Node& n) {
  AdaptationGoal g;
  const auto attribute = n.at("attribute").str();
  std::vector<UtilityResponseCurve::Point> points;
  const auto curve = n.at("curve");
  for (const auto& p : curve.items()) {
    const auto pair = p.items();
    if (pair.size() != 2) parse_fail(p.path(), "expected a [value, utility] pair");
    points.emplace_back(pair[0].number(), pair[1].number());
  }
  g.curve = at_path(curve.path(), [&] { return UtilityResponseCurve(attribute, std::move(points)); });
  g.weight = n.at("weight").number();
  if (auto f = n.opt("floor")) g.floor = f->number();
  return g;
}

ScalingFunction parse_scaling(const Node& n) {
  const auto kind = n.at("kind").str();
  if (kind == "Identity") return ScalingFunction::identity();
  if (kind == "ThresholdMultiplier") {
    return at_path(n.path(), [&] {
      return ScalingFunction::threshold_multiplier(n.at("threshold").number(), n.at("multiplier").number());
    });
  }
  parse_fail(n.path() + "/kind", "expected 'Identity' or 'ThresholdMultiplier'");
}

CostModel parse_cost_model(const Node& n) {
  CostModel m;
  for (const auto& a : n.at("attributes").items()) {
    WeightedCostAttribute w;
    w.attribute.id = a.at("id").str();
    if (auto t = a.opt("costType")) {
      auto type = parse_cost_type(t->str());
      if (!type) parse_fail(t->path(), "unknown cost type '" + t->str() + "'");
      w.attribute.type = *type;
    }
    if (auto metric = a.opt("metric")) w.attribute.metric = metric->str();
    if (auto weight = a.opt("weight")) w.weight = weight->number();
    m.attributes.push_back(std::move(w));
  }
  for (const auto& e : n.at("entries").items()) {
    CostEntry entry;
    if (auto a = e.opt("attribute")) {
      entry.attribute = a->str();
    } else if (m.attributes.size() == 1) {
      entry.attribute = m.attributes.front().attribute.id;
    } else {
      parse_fail(e.path() + "/attribute", "required when several cost attributes are declared");
    }
    entry.provider = e.at("provider").str();
    const auto tier = e.at("slaTier");
    auto parsed = parse_sla_tier(tier.str());
    if (!parsed) parse_fail(tier.path(), "unknown SLA tier '" + tier.str() + "'");
    entry.tier = *parsed;
    entry.role = e.at("role").str();
    entry.cost = e.at("cost").number();
    m.entries.push_back(std::move(entry));
  }
  return m;
}

RiskMatrix parse_matrix(const Node& n) {
  std::vector<std::vector<int>> cells;
  for (const auto& row : n.items()) {
    std::vector<int> r;
    for (const auto& cell : row.items()) r.push_back(cell.integer());
    cells.push_back(std::move(r));
  }
  return at_path(n.path(), [&] { return RiskMatrix(std::move(cells)); });
}

RiskAttributeModel parse_risk_attribute(const Node& n) {
  RiskAttributeModel a;
  a.id = n.at("id").str();
  a.weight = n.at("weight").number();
  const auto source = n.at("source");
  auto parsed = parse_risk_source(source.str());
  if (!parsed) parse_fail(source.path(), "unknown risk source '" + source.str() + "'");
  a.source = *parsed;
  if (auto m = n.opt("matrix")) a.matrix = parse_matrix(*m);

  if (auto table = n.opt("metricTable")) {
    for (const auto& [key, row] : table->members()) {
      RiskRating r;
      r.likelihood = row.at("likelihood").fraction();
      r.consequence = row.at("consequence").integer();
      if (auto l = row.opt("likelihoodLabel")) r.likelihood_label = l->str();
      if (auto c = row.opt("consequenceLabel")) r.consequence_label = c->str();
      a.table.rows.emplace(key, std::move(r));
    }
  }
  if (auto roles = n.opt("ratedRoles")) {
    for (const auto& r : roles->items()) a.rated_roles.push_back(r.str());
  }
  if (auto levels = n.opt("levels")) {
    for (const auto& [option, level] : levels->members()) a.levels[option] = level.integer();
  }
  if (auto d = n.opt("defaultLevel")) a.default_level = d->integer();
  if (auto u = n.opt("uncertainty")) a.uncertainty = u->str();
  if (auto lik = n.opt("likelihoodByLevel")) {
    for (const auto& [level, l] : lik->members()) a.likelihood_by_level[level] = l.integer();
  }
  if (auto q = n.opt("quality")) a.quality = q->str();
  if (auto bands = n.opt("bands")) {
    for (const auto& b : bands->items()) {
      ConsequenceBand band;
      if (auto max = b.opt("max")) band.max = max->number();
      band.consequence = b.at("consequence").integer();
      a.bands.push_back(band);
    }
  }
  return a;
}

RiskModel parse_risk_model(const Node& n) {
  RiskModel m;
  for (const auto& a : n.at("attributes").items()) m.attributes.push_back(parse_risk_attribute(a));
  if (auto r = n.opt("likelihoodRounding")) {
    auto rounding = parse_rounding(r->str());
    if (!rounding) parse_fail(r->path(), "expected 'halfUp', 'halfDown' or 'halfEven'");
    m.rounding = *rounding;
  }
  if (auto t = n.opt("vetoThreshold")) m.veto_threshold = t->number();
  if (auto mode = n.opt("vetoMode")) {
    const auto text = mode->str();
    if (text == "overallRisk") m.veto_mode = VetoMode::OverallRisk;
    else if (text == "attributeLevel") m.veto_mode = VetoMode::AttributeLevel;
    else parse_fail(mode->path(), "expected 'overallRisk' or 'attributeLevel'");
  }
  return m;
}

DecisionPolicy parse_decision(const Node& n) {
  DecisionPolicy p;
  if (auto m = n.opt("method")) {
    auto method = parse_desirability_method(m->str());
    if (!method) parse_fail(m->path(), "expected 'ValueForCost' or 'NetBenefit'");
    p.method = *method;
  }
  if (auto s = n.opt("benefitScaling")) p.benefit_scaling = parse_scaling(*s);
  if (auto s = n.opt("costScaling")) p.cost_scaling = parse_scaling(*s);
  p.w_desirability = n.at("wDesirability").number();
  p.w_risk = n.at("wRisk").number();
  if (auto b = n.opt("includeCurrentAsBaseline")) p.include_current_as_baseline = b->boolean();
  return p;
}

TableScenarioData parse_table_model(const Node& n) {
  TableScenarioData t;
  if (auto u = n.opt("noiseUncertainty")) t.noise_uncertainty = u->str();
  if (auto u = n.opt("jammingUncertainty")) t.jamming_uncertainty = u->str();
  for (const auto& l : n.at("levels").items()) t.levels.push_back(l.str());
  for (const auto& c : n.at("configurations").items()) {
    TableConfiguration cfg;
    cfg.id = c.at("id").str();
    cfg.power = c.at("power").str();
    cfg.schedule = c.at("schedule").str();
    cfg.energy = c.at("energy").number();
    cfg.noise_loss = number_map(c.at("noiseLoss"));
    cfg.jamming_loss = number_map(c.at("jammingLoss"));
    t.configurations.push_back(std::move(cfg));
  }
  t.power_change_cost = number_map(n.at("powerChangeCost"));
  for (const auto& s : n.at("scheduleSwitchCost").items()) {
    t.schedule_switch_cost[{s.at("from").str(), s.at("to").str()}] = s.at("cost").number();
  }
  return t;
}

Configuration parse_configuration(const Node& n, const std::optional<TableScenarioData>& table) {
  if (n.raw().is_string()) {
    if (!table) parse_fail(n.path(), "configuration references need a table model");
    return at_path(n.path(), [&] { return table->configuration(n.str()); });
  }
  Configuration c;
  c.id = n.at("id").str();
  for (const auto& [role, service] : n.at("bindings").members()) c.bindings[role] = service.str();
  if (auto q = n.opt("observedQualities")) c.observed_qualities = number_map(*q);
  return c;
}

// ---------------------------------------------------------------------------
// Writing

json scaling_to_json(const ScalingFunction& f) {
  if (f.kind == ScalingFunction::Kind::Identity) return {{"kind", "Identity"}};
  return {{"kind", "ThresholdMultiplier"}, {"threshold", f.threshold}, {"multiplier", f.multiplier}};
}

json configuration_to_json(const Configuration& c) {
  json out = {{"id", c.id}, {"bindings", c.bindings}};
  if (c.observed_qualities) out["observedQualities"] = *c.observed_qualities;
  return out;
}

json risk_attribute_to_json(const RiskAttributeModel& a) {
  json out = {{"id", a.id}, {"weight", a.weight}, {"source", std::string(to_string(a.source))}};
  if (a.matrix.likelihood_levels() > 0) out["matrix"] = a.matrix.cells();
  if (!a.table.rows.empty()) {
    json table = json::object();
    for (const auto& [key, r] : a.table.rows) {
      json row = {{"likelihood", r.likelihood}, {"consequence", r.consequence}};
      if (!r.likelihood_label.empty()) row["likelihoodLabel"] = r.likelihood_label;
      if (!r.consequence_label.empty()) row["consequenceLabel"] = r.consequence_label;
      table[key] = std::move(row);
    }
    out["metricTable"] = std::move(table);
  }
  if (!a.rated_roles.empty()) out["ratedRoles"] = a.rated_roles;
  if (!a.levels.empty()) out["levels"] = a.levels;
  if (a.default_level) out["defaultLevel"] = *a.default_level;
  if (!a.uncertainty.empty()) out["uncertainty"] = a.uncertainty;
  if (!a.likelihood_by_level.empty()) out["likelihoodByLevel"] = a.likelihood_by_level;
  if (!a.quality.empty()) out["quality"] = a.quality;
  if (!a.bands.empty()) {
    json bands = json::array();
    for (const auto& b : a.bands) {
      json band = {{"consequence", b.consequence}};
      if (b.max) band["max"] = *b.max;
      bands.push_back(std::move(band));
    }
    out["bands"] = std::move(bands);
  }
  return out;
}

json table_model_to_json(const TableScenarioData& t) {
  json configs = json::array();
  for (const auto& c : t.configurations) {
    configs.push_back({{"id", c.id},
                       {"power", c.power},
                       {"schedule", c.schedule},
                       {"energy", c.energy},
                       {"noiseLoss", c.noise_loss},
                       {"jammingLoss", c.jamming_loss}});
  }
  json switches = json::array();
  for (const auto& [key, cost] : t.schedule_switch_cost) {
    switches.push_back({{"from", key.first}, {"to", key.second}, {"cost", cost}});
  }
  return {{"noiseUncertainty", t.noise_uncertainty},
          {"jammingUncertainty", t.jamming_uncertainty},
          {"levels", t.levels},
          {"configurations", std::move(configs)},
          {"powerChangeCost", t.power_change_cost},
          {"scheduleSwitchCost", std::move(switches)}};
}

}  // namespace

UncertaintyState parse_uncertainty(const json& document, const std::string& path) {
  Node n(document, path);
  UncertaintyState u;
  if (auto b = n.opt("branchProbabilities")) u.branch_probabilities = number_map(*b);
  if (auto d = n.opt("reliabilityDrift")) u.reliability_drift = number_map(*d);
  if (auto l = n.opt("levels")) {
    for (const auto& [k, v] : l->members()) u.levels[k] = v.str();
  }
  return u;
}

json uncertainty_to_json(const UncertaintyState& state) {
  return {{"branchProbabilities", state.branch_probabilities},
          {"reliabilityDrift", state.reliability_drift},
          {"levels", state.levels}};
}

ScenarioSpec parse_scenario(const json& document) {
  Node root(document, "");
  ScenarioSpec spec;
  if (auto v = root.opt("schemaVersion")) {
    spec.schema_version = v->integer();
    if (spec.schema_version != kSchemaVersion) {
      parse_fail(v->path(), "unsupported schema version " + std::to_string(spec.schema_version));
    }
  }
  if (auto name = root.opt("name")) spec.name = name->str();
  if (auto t = root.opt("tableModel")) spec.table_model = parse_table_model(*t);

  if (auto roles = root.opt("roles")) {
    for (const auto& r : roles->items()) spec.roles.push_back(r.str());
  } else if (spec.table_model) {
    spec.roles = {std::string(kPowerRole), std::string(kScheduleRole)};
  } else {
    parse_fail("/roles", "missing required field");
  }

  std::vector<ServiceProvider> providers;
  std::vector<ConcreteService> services;
  if (auto p = root.opt("providers")) {
    for (const auto& item : p->items()) providers.push_back(parse_provider(item));
  }
  if (auto s = root.opt("services")) {
    for (const auto& item : s->items()) services.push_back(parse_service(item));
  }
  spec.catalog = at_path("/services", [&] { return ServiceCatalog(std::move(providers), std::move(services)); });

  if (auto w = root.opt("workflow")) spec.workflow = parse_workflow(*w);
  if (auto u = root.opt("uncertainty")) spec.uncertainty = parse_uncertainty(u->raw(), u->path());
  for (const auto& g : root.at("goals").items()) spec.goals.push_back(parse_goal(g));
  if (auto c = root.opt("costModel")) spec.cost_model = parse_cost_model(*c);
  spec.risk_model = parse_risk_model(root.at("riskModel"));
  spec.decision = parse_decision(root.at("decision"));
  spec.initial_configuration = parse_configuration(root.at("initialConfiguration"), spec.table_model);

  const auto space = root.at("adaptationSpace");
  const auto mode = space.at("mode").str();
  if (mode == "explicit") {
    spec.space_mode = SpaceMode::Explicit;
    for (const auto& o : space.at("options").items()) {
      spec.explicit_space.push_back(parse_configuration(o, spec.table_model));
    }
  } else if (mode == "cartesian") {
    spec.space_mode = SpaceMode::Cartesian;
  } else if (mode == "table") {
    spec.space_mode = SpaceMode::Table;
  } else {
    parse_fail(space.path() + "/mode", "expected 'explicit', 'cartesian' or 'table'");
  }

  if (auto o = root.opt("utilityOverrides")) {
    for (const auto& [id, values] : o->members()) spec.utility_overrides[id] = number_map(values);
  }

  spec.validate();
  return spec;
}

void ScenarioSpec::validate() const {
  if (roles.empty()) invalid("/roles", "at least one role is required");
  {
    std::set<std::string> unique(roles.begin(), roles.end());
    if (unique.size() != roles.size()) invalid("/roles", "roles must be unique");
  }
  if (table_model) {
    at_path("/tableModel", [&] { table_model->validate(); });
    for (const auto& [uncertainty, level] : uncertainty.levels) {
      if (std::find(table_model->levels.begin(), table_model->levels.end(), level) == table_model->levels.end()) {
        invalid("/uncertainty/levels/" + escape_key(uncertainty), "unknown level '" + level + "'");
      }
    }
  } else {
    if (!workflow) invalid("/workflow", "a workflow or a table model is required");
    at_path("/workflow", [&] { workflow->validate(roles, &uncertainty); });
    if (!cost_model) invalid("/costModel", "a cost model is required");
    at_path("/costModel", [&] { cost_model->validate(catalog); });
    for (const auto& [service, delta] : uncertainty.reliability_drift) {
      if (!catalog.find_service(service)) {
        invalid("/uncertainty/reliabilityDrift/" + escape_key(service), "unknown service");
      }
    }
  }
  if (goals.empty()) invalid("/goals", "at least one goal is required");
  at_path("/goals", [&] { validate_goals(goals); });
  at_path("/riskModel", [&] { risk_model.validate(); });
  at_path("/decision", [&] { decision.validate(); });

  const ServiceCatalog* cat = table_model ? nullptr : &catalog;
  at_path("/initialConfiguration", [&] { validate_configuration(initial_configuration, roles, cat); });
  for (std::size_t i = 0; i < explicit_space.size(); ++i) {
    at_path("/adaptationSpace/options/" + std::to_string(i),
            [&] { validate_configuration(explicit_space[i], roles, cat); });
  }
  if (space_mode == SpaceMode::Table && !table_model) invalid("/adaptationSpace/mode", "'table' needs a table model");
  at_path("/adaptationSpace", [&] { (void)enumerate_adaptation_space(*this); });

  for (const auto& [id, values] : utility_overrides) {
    for (const auto& [attribute, u] : values) {
      if (!(u >= 0.0 && u <= 100.0)) {
        invalid("/utilityOverrides/" + escape_key(id) + "/" + escape_key(attribute), "utility outside [0,100]");
      }
    }
  }
}

std::vector<Configuration> enumerate_adaptation_space(const ScenarioSpec& spec) {
  std::vector<Configuration> out;
  switch (spec.space_mode) {
    case SpaceMode::Explicit: out = spec.explicit_space; break;
    case SpaceMode::Cartesian: out = cartesian_configurations(spec.roles, spec.catalog); break;
    case SpaceMode::Table:
      if (spec.table_model) out = spec.table_model->all_configurations();
      break;
  }
  if (out.empty()) throw Error(ErrorCode::EmptyAdaptationSpace, "the adaptation space is empty");
  return out;
}

Configuration find_configuration(const ScenarioSpec& spec, std::string_view id) {
  if (spec.initial_configuration.id == id) return spec.initial_configuration;
  for (const auto& c : enumerate_adaptation_space(spec)) {
    if (c.id == id) return c;
  }
  if (spec.table_model) return spec.table_model->configuration(id);
  throw Error(ErrorCode::UnknownConfiguration, "unknown configuration '" + std::string(id) + "'");
}

json scenario_to_json(const ScenarioSpec& spec) {
  json out;
  out["schemaVersion"] = spec.schema_version;
  if (!spec.name.empty()) out["name"] = spec.name;
  out["roles"] = spec.roles;

  json providers = json::array();
  for (const auto& p : spec.catalog.providers()) {
    providers.push_back({{"id", p.id},
                         {"slaTier", std::string(to_string(p.sla_tier))},
                         {"dataPolicy", std::string(to_string(p.data_policy))}});
  }
  out["providers"] = std::move(providers);
  json services = json::array();
  for (const auto& s : spec.catalog.services()) {
    services.push_back({{"id", s.id},
                        {"role", s.role},
                        {"provider", s.provider},
                        {"failureProbability", s.failure_probability},
                        {"resourceUsage", s.resource_usage}});
  }
  out["services"] = std::move(services);

  if (spec.workflow) {
    json nodes = json::array();
    for (const auto& n : spec.workflow->nodes) {
      json node = {{"id", n.id}};
      if (n.kind == WorkflowNode::Kind::Invoke) {
        node["kind"] = "invoke";
        node["role"] = n.role;
        if (!n.next.empty()) node["next"] = n.next;
      } else {
        node["kind"] = "choice";
        json outcomes = json::array();
        for (const auto& o : n.outcomes) {
          json outcome = {{"id", o.id}, {"probability", o.probability}};
          if (!o.next.empty()) outcome["next"] = o.next;
          outcomes.push_back(std::move(outcome));
        }
        node["outcomes"] = std::move(outcomes);
      }
      nodes.push_back(std::move(node));
    }
    out["workflow"] = {{"entry", spec.workflow->entry}, {"acyclic", spec.workflow->acyclic}, {"nodes", nodes}};
  }
  out["uncertainty"] = uncertainty_to_json(spec.uncertainty);

  json goals = json::array();
  for (const auto& g : spec.goals) {
    json curve = json::array();
    for (const auto& [v, u] : g.curve.points()) curve.push_back({v, u});
    json goal = {{"attribute", g.attribute()}, {"weight", g.weight}, {"curve", std::move(curve)}};
    if (g.floor) goal["floor"] = *g.floor;
    goals.push_back(std::move(goal));
  }
  out["goals"] = std::move(goals);

  if (spec.cost_model) {
    json attributes = json::array();
    for (const auto& [a, w] : spec.cost_model->attributes) {
      attributes.push_back(
          {{"id", a.id}, {"costType", std::string(to_string(a.type))}, {"metric", a.metric}, {"weight", w}});
    }
    json entries = json::array();
    for (const auto& e : spec.cost_model->entries) {
      entries.push_back({{"attribute", e.attribute},
                         {"provider", e.provider},
                         {"slaTier", std::string(to_string(e.tier))},
                         {"role", e.role},
                         {"cost", e.cost}});
    }
    out["costModel"] = {{"attributes", std::move(attributes)}, {"entries", std::move(entries)}};
  }

  json risk_attributes = json::array();
  for (const auto& a : spec.risk_model.attributes) risk_attributes.push_back(risk_attribute_to_json(a));
  json risk = {{"attributes", std::move(risk_attributes)},
               {"likelihoodRounding", std::string(to_string(spec.risk_model.rounding))},
               {"vetoMode", spec.risk_model.veto_mode == VetoMode::OverallRisk ? "overallRisk" : "attributeLevel"}};
  if (spec.risk_model.veto_threshold) risk["vetoThreshold"] = *spec.risk_model.veto_threshold;
  out["riskModel"] = std::move(risk);

  const auto& d = spec.decision;
  out["decision"] = {{"method", std::string(to_string(d.method))},
                     {"benefitScaling", scaling_to_json(d.benefit_scaling)},
                     {"costScaling", scaling_to_json(d.cost_scaling)},
                     {"wDesirability", d.w_desirability},
                     {"wRisk", d.w_risk},
                     {"includeCurrentAsBaseline", d.include_current_as_baseline}};

  out["initialConfiguration"] = configuration_to_json(spec.initial_configuration);
  switch (spec.space_mode) {
    case SpaceMode::Explicit: {
      json options = json::array();
      for (const auto& c : spec.explicit_space) options.push_back(configuration_to_json(c));
      out["adaptationSpace"] = {{"mode", "explicit"}, {"options", std::move(options)}};
      break;
    }
    case SpaceMode::Cartesian: out["adaptationSpace"] = {{"mode", "cartesian"}}; break;
    case SpaceMode::Table: out["adaptationSpace"] = {{"mode", "table"}}; break;
  }
  if (!spec.utility_overrides.empty()) out["utilityOverrides"] = spec.utility_overrides;
  if (spec.table_model) out["tableModel"] = table_model_to_json(*spec.table_model);
  return out;
}

ScenarioSpec load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError(ErrorCode::ParseError, "", "cannot open '" + path.string() + "'");
  json document;
  try {
    document = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DocumentError(ErrorCode::ParseError, "", std::string("malformed JSON: ") + e.what());
  }
  return parse_scenario(document);
}

void save_scenario(const ScenarioSpec& spec, const std::filesystem::path& path) {
  std::ofstream out(path);
  out << scenario_to_json(spec).dump(2) << '\n';
  if (!out) throw Error(ErrorCode::SinkWriteError, "cannot write '" + path.string() + "'");
}

}  // namespace bcr
