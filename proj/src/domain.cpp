#include "bcr/domain.hpp"

#include <algorithm>
#include <set>

#include "bcr/error.hpp"

namespace bcr {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyAdaptationSpace: return "EmptyAdaptationSpace";
    case ErrorCode::RoleSetMismatch: return "RoleSetMismatch";
    case ErrorCode::UnknownService: return "UnknownService";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::MissingAttribute: return "MissingAttribute";
    case ErrorCode::MissingCostEntry: return "MissingCostEntry";
    case ErrorCode::DuplicateAttribute: return "DuplicateAttribute";
    case ErrorCode::ZeroScaledCost: return "ZeroScaledCost";
    case ErrorCode::UnratedTier: return "UnratedTier";
    case ErrorCode::EmptyRatings: return "EmptyRatings";
    case ErrorCode::OutOfAxis: return "OutOfAxis";
    case ErrorCode::MissingRiskLevel: return "MissingRiskLevel";
    case ErrorCode::NoViableOption: return "NoViableOption";
    case ErrorCode::InsufficientOptions: return "InsufficientOptions";
    case ErrorCode::SinkWriteError: return "SinkWriteError";
    case ErrorCode::UnboundRole: return "UnboundRole";
    case ErrorCode::RunCapExceeded: return "RunCapExceeded";
    case ErrorCode::TooManyPaths: return "TooManyPaths";
    case ErrorCode::UnknownConfiguration: return "UnknownConfiguration";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Error";
}

std::string_view to_string(SlaTier tier) {
  switch (tier) {
    case SlaTier::Gold: return "Gold";
    case SlaTier::Silver: return "Silver";
    case SlaTier::Bronze: return "Bronze";
    case SlaTier::Unlabeled: return "Unlabeled";
  }
  return "Unlabeled";
}

std::string_view to_string(DataPolicy policy) {
  switch (policy) {
    case DataPolicy::StoredLocal: return "StoredLocal";
    case DataPolicy::StoredWithPartners: return "StoredWithPartners";
    case DataPolicy::SharedWithPartners: return "SharedWithPartners";
    case DataPolicy::Unspecified: return "Unspecified";
  }
  return "Unspecified";
}

std::optional<SlaTier> parse_sla_tier(std::string_view text) {
  for (auto t : {SlaTier::Gold, SlaTier::Silver, SlaTier::Bronze, SlaTier::Unlabeled}) {
    if (to_string(t) == text) return t;
  }
  return std::nullopt;
}

std::optional<DataPolicy> parse_data_policy(std::string_view text) {
  for (auto p : {DataPolicy::StoredLocal, DataPolicy::StoredWithPartners, DataPolicy::SharedWithPartners,
                 DataPolicy::Unspecified}) {
    if (to_string(p) == text) return p;
  }
  return std::nullopt;
}

ServiceCatalog::ServiceCatalog(std::vector<ServiceProvider> providers, std::vector<ConcreteService> services)
    : providers_(std::move(providers)), services_(std::move(services)) {
  std::set<std::string> seen;
  for (const auto& p : providers_) {
    if (!seen.insert(p.id).second) throw Error(ErrorCode::InvalidModel, "duplicate provider id '" + p.id + "'");
  }
  seen.clear();
  for (const auto& s : services_) {
    if (!seen.insert(s.id).second) throw Error(ErrorCode::InvalidModel, "duplicate service id '" + s.id + "'");
    if (!find_provider(s.provider)) {
      throw Error(ErrorCode::UnknownService, "service '" + s.id + "' names unknown provider '" + s.provider + "'");
    }
    if (!(s.failure_probability >= 0.0 && s.failure_probability <= 1.0)) {
      throw Error(ErrorCode::InvalidModel, "service '" + s.id + "' failure probability outside [0,1]");
    }
    if (!(s.resource_usage >= 0.0)) {
      throw Error(ErrorCode::InvalidModel, "service '" + s.id + "' has negative resource usage");
    }
  }
}

const ServiceProvider* ServiceCatalog::find_provider(std::string_view id) const {
  auto it = std::find_if(providers_.begin(), providers_.end(), [&](const auto& p) { return p.id == id; });
  return it == providers_.end() ? nullptr : &*it;
}

const ConcreteService* ServiceCatalog::find_service(std::string_view id) const {
  auto it = std::find_if(services_.begin(), services_.end(), [&](const auto& s) { return s.id == id; });
  return it == services_.end() ? nullptr : &*it;
}

const ConcreteService& ServiceCatalog::service(std::string_view id) const {
  if (const auto* s = find_service(id)) return *s;
  throw Error(ErrorCode::UnknownService, "unknown service '" + std::string(id) + "'");
}

const ServiceProvider& ServiceCatalog::provider_of(const ConcreteService& s) const {
  if (const auto* p = find_provider(s.provider)) return *p;
  throw Error(ErrorCode::UnknownService, "unknown provider '" + s.provider + "'");
}

std::vector<const ConcreteService*> ServiceCatalog::services_for_role(std::string_view role) const {
  std::vector<const ConcreteService*> out;
  for (const auto& s : services_) {
    if (s.role == role) out.push_back(&s);
  }
  std::sort(out.begin(), out.end(), [](const auto* a, const auto* b) { return a->id < b->id; });
  return out;
}

void validate_configuration(const Configuration& config, std::span<const std::string> roles,
                            const ServiceCatalog* catalog) {
  if (config.bindings.size() != roles.size()) {
    throw Error(ErrorCode::RoleSetMismatch, "configuration '" + config.id + "' binds " +
                                                std::to_string(config.bindings.size()) + " roles, expected " +
                                                std::to_string(roles.size()));
  }
  for (const auto& role : roles) {
    auto it = config.bindings.find(role);
    if (it == config.bindings.end()) {
      throw Error(ErrorCode::RoleSetMismatch, "configuration '" + config.id + "' does not bind role '" + role + "'");
    }
    if (catalog) {
      const auto& service = catalog->service(it->second);
      if (service.role != role) {
        throw Error(ErrorCode::RoleSetMismatch, "configuration '" + config.id + "' binds '" + service.id +
                                                    "' (role " + service.role + ") to role '" + role + "'");
      }
    }
  }
}

std::vector<Configuration> cartesian_configurations(std::span<const std::string> roles,
                                                    const ServiceCatalog& catalog) {
  std::vector<std::vector<const ConcreteService*>> choices;
  choices.reserve(roles.size());
  for (const auto& role : roles) {
    auto candidates = catalog.services_for_role(role);
    if (candidates.empty()) return {};
    choices.push_back(std::move(candidates));
  }
  if (choices.empty()) return {};

  std::vector<Configuration> out;
  std::vector<std::size_t> index(roles.size(), 0);
  while (true) {
    Configuration c;
    for (std::size_t r = 0; r < roles.size(); ++r) {
      const auto* s = choices[r][index[r]];
      c.bindings.emplace(roles[r], s->id);
      if (r > 0) c.id += '+';
      c.id += s->id;
    }
    out.push_back(std::move(c));

    // odometer increment, last role fastest
    std::size_t r = roles.size();
    while (r > 0) {
      --r;
      if (++index[r] < choices[r].size()) break;
      index[r] = 0;
      if (r == 0) return out;
    }
  }
}

std::vector<RoleChange> diff_configurations(const Configuration& current, const Configuration& option) {
  if (current.bindings.size() != option.bindings.size()) {
    throw Error(ErrorCode::RoleSetMismatch, "'" + current.id + "' and '" + option.id + "' bind different role sets");
  }
  std::vector<RoleChange> changes;
  for (const auto& [role, old_service] : current.bindings) {
    auto it = option.bindings.find(role);
    if (it == option.bindings.end()) {
      throw Error(ErrorCode::RoleSetMismatch, "'" + option.id + "' does not bind role '" + role + "'");
    }
    if (it->second != old_service) changes.push_back({role, old_service, it->second});
  }
  return changes;
}

}  // namespace bcr
