#include "bcr/cost.hpp"

#include <algorithm>
#include <set>

#include "bcr/error.hpp"

namespace bcr {

std::string_view to_string(CostType type) {
  switch (type) {
    case CostType::Resources: return "Resources";
    case CostType::Overhead: return "Overhead";
    case CostType::Economic: return "Economic";
  }
  return "Resources";
}

std::optional<CostType> parse_cost_type(std::string_view text) {
  for (auto t : {CostType::Resources, CostType::Overhead, CostType::Economic}) {
    if (to_string(t) == text) return t;
  }
  return std::nullopt;
}

CostAttributeRegistry CostAttributeRegistry::builtin() {
  CostAttributeRegistry r;
  r.add({"Communication", CostType::Resources, "Required bandwidth"})
      .add({"Computation", CostType::Resources, "Required processing resources"})
      .add({"Storage", CostType::Resources, "Required memory"})
      .add({"Power", CostType::Resources, "Required energy"})
      .add({"Availability", CostType::Overhead, "Degree of reduced service"})
      .add({"Performance", CostType::Overhead, "Degree of degraded user experience"})
      .add({"Security", CostType::Overhead, "Cost to manage exposed vulnerability"})
      .add({"Financial", CostType::Economic, "Monetary price"});
  return r;
}

CostAttributeRegistry& CostAttributeRegistry::add(CostAttribute attribute) {
  if (find(attribute.id)) {
    throw Error(ErrorCode::DuplicateAttribute, "cost attribute '" + attribute.id + "' already registered");
  }
  attributes_.push_back(std::move(attribute));
  return *this;
}

const CostAttribute* CostAttributeRegistry::find(std::string_view id) const {
  auto it = std::find_if(attributes_.begin(), attributes_.end(), [&](const auto& a) { return a.id == id; });
  return it == attributes_.end() ? nullptr : &*it;
}

CostAttributeRegistry register_cost_attribute(CostAttributeRegistry registry, CostAttribute attribute) {
  registry.add(std::move(attribute));
  return registry;
}

double CostModel::change_cost(std::string_view provider, std::string_view role) const {
  double total = 0.0;
  for (const auto& [attribute, weight] : attributes) {
    auto it = std::find_if(entries.begin(), entries.end(), [&](const CostEntry& e) {
      return e.attribute == attribute.id && e.provider == provider && e.role == role;
    });
    if (it == entries.end()) {
      throw Error(ErrorCode::MissingCostEntry, "no '" + attribute.id + "' cost for provider '" + std::string(provider) +
                                                   "' and role '" + std::string(role) + "'");
    }
    total += weight == 1.0 ? it->cost : weight * it->cost;
  }
  return total;
}

void CostModel::validate(const ServiceCatalog& catalog) const {
  if (attributes.empty()) throw Error(ErrorCode::InvalidModel, "cost model has no attributes");
  std::set<std::string> ids;
  for (const auto& a : attributes) {
    if (!ids.insert(a.attribute.id).second) {
      throw Error(ErrorCode::DuplicateAttribute, "cost attribute '" + a.attribute.id + "' listed twice");
    }
    if (!(a.weight >= 0.0)) throw Error(ErrorCode::InvalidModel, "cost attribute weight must be non-negative");
  }
  for (const auto& e : entries) {
    if (!ids.contains(e.attribute)) {
      throw Error(ErrorCode::InvalidModel, "cost entry names unknown attribute '" + e.attribute + "'");
    }
    if (!(e.cost >= 0.0)) throw Error(ErrorCode::InvalidModel, "cost entries must be non-negative");
    const auto* p = catalog.find_provider(e.provider);
    if (!p) throw Error(ErrorCode::UnknownService, "cost entry names unknown provider '" + e.provider + "'");
    if (p->sla_tier != e.tier) {
      throw Error(ErrorCode::InvalidModel, "cost entry tier for '" + e.provider + "' disagrees with its SLA");
    }
  }
  for (const auto& s : catalog.services()) change_cost(s.provider, s.role);
}

CostEstimate estimate_cost(const Configuration& current, const Configuration& option, const CostModel& model,
                           const ServiceCatalog& catalog) {
  CostEstimate out;
  out.option_id = option.id;
  for (const auto& change : diff_configurations(current, option)) {
    const auto& incoming = catalog.service(change.new_service);
    const double c = model.change_cost(incoming.provider, change.role);
    out.per_change.emplace_back(change.role, c);
    out.estimated_cost += c;
  }
  return out;
}

}  // namespace bcr
