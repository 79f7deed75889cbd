#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bcr {

enum class SlaTier { Gold, Silver, Bronze, Unlabeled };
enum class DataPolicy { StoredLocal, StoredWithPartners, SharedWithPartners, Unspecified };

std::string_view to_string(SlaTier tier);
std::string_view to_string(DataPolicy policy);
std::optional<SlaTier> parse_sla_tier(std::string_view text);
std::optional<DataPolicy> parse_data_policy(std::string_view text);

/// Quality attribute id -> value (raw measurement or utility percent, by context).
using QualityMap = std::map<std::string, double>;

struct ServiceProvider {
  std::string id;
  SlaTier sla_tier = SlaTier::Unlabeled;
  DataPolicy data_policy = DataPolicy::Unspecified;

  bool operator==(const ServiceProvider&) const = default;
};

struct ConcreteService {
  std::string id;
  std::string role;
  std::string provider;
  double failure_probability = 0.0;
  double resource_usage = 0.0;

  bool operator==(const ConcreteService&) const = default;
};

/// A binding of every abstract role to one concrete service. Adaptation
/// options are full configurations, never deltas.
struct Configuration {
  std::string id;
  std::map<std::string, std::string> bindings;  // role -> service id
  std::optional<QualityMap> observed_qualities;

  bool same_bindings(const Configuration& other) const { return bindings == other.bindings; }
  bool operator==(const Configuration&) const = default;
};

struct UncertaintyState {
  std::map<std::string, double> branch_probabilities;  // outcome id -> probability
  std::map<std::string, double> reliability_drift;     // service id -> delta on failure probability
  std::map<std::string, std::string> levels;           // uncertainty id -> ordinal level label

  bool operator==(const UncertaintyState&) const = default;
};

struct RoleChange {
  std::string role;
  std::string old_service;
  std::string new_service;

  bool operator==(const RoleChange&) const = default;
};

/// Providers and services of one scenario, with id lookups.
class ServiceCatalog {
 public:
  ServiceCatalog() = default;
  ServiceCatalog(std::vector<ServiceProvider> providers, std::vector<ConcreteService> services);

  const std::vector<ServiceProvider>& providers() const { return providers_; }
  const std::vector<ConcreteService>& services() const { return services_; }

  const ServiceProvider* find_provider(std::string_view id) const;
  const ConcreteService* find_service(std::string_view id) const;
  const ConcreteService& service(std::string_view id) const;           // throws UnknownService
  const ServiceProvider& provider_of(const ConcreteService& s) const;  // throws UnknownService

  /// Services whose role equals `role`, ordered by id.
  std::vector<const ConcreteService*> services_for_role(std::string_view role) const;

  bool operator==(const ServiceCatalog&) const = default;

 private:
  std::vector<ServiceProvider> providers_;
  std::vector<ConcreteService> services_;
};

/// Checks that `config` binds exactly the roles of `roles` and, when a catalog
/// is given, that each bound service exists and plays the role it is bound to.
void validate_configuration(const Configuration& config, std::span<const std::string> roles,
                            const ServiceCatalog* catalog);

/// All role -> service products, lexicographic in (role order, service id).
/// Generated ids join the bound service ids with '+'.
std::vector<Configuration> cartesian_configurations(std::span<const std::string> roles,
                                                    const ServiceCatalog& catalog);

/// Roles whose bound service differs, in role-name order.
std::vector<RoleChange> diff_configurations(const Configuration& current, const Configuration& option);

}  // namespace bcr
