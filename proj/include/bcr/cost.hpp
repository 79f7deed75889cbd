#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bcr/domain.hpp"

namespace bcr {

enum class CostType { Resources, Overhead, Economic };

std::string_view to_string(CostType type);
std::optional<CostType> parse_cost_type(std::string_view text);

struct CostAttribute {
  std::string id;
  CostType type = CostType::Resources;
  std::string metric;

  bool operator==(const CostAttribute&) const = default;
};

/// Extensible catalogue of cost attributes; ids are unique.
class CostAttributeRegistry {
 public:
  /// The built-in taxonomy: four resource, three overhead and one economic attribute.
  static CostAttributeRegistry builtin();

  /// Throws DuplicateAttribute when the id is already registered.
  CostAttributeRegistry& add(CostAttribute attribute);

  const CostAttribute* find(std::string_view id) const;
  std::size_t size() const { return attributes_.size(); }
  const std::vector<CostAttribute>& attributes() const { return attributes_; }

 private:
  std::vector<CostAttribute> attributes_;
};

CostAttributeRegistry register_cost_attribute(CostAttributeRegistry registry, CostAttribute attribute);

struct CostEntry {
  std::string attribute;
  std::string provider;
  SlaTier tier = SlaTier::Unlabeled;
  std::string role;
  double cost = 0.0;

  bool operator==(const CostEntry&) const = default;
};

struct WeightedCostAttribute {
  CostAttribute attribute;
  double weight = 1.0;

  bool operator==(const WeightedCostAttribute&) const = default;
};

/// One-off adaptation cost per (provider, role), looked up by the provider of
/// each newly bound service. Several attributes combine by weighted sum.
struct CostModel {
  std::vector<WeightedCostAttribute> attributes;
  std::vector<CostEntry> entries;

  /// Weighted cost of binding a service of `provider` to `role`; throws
  /// MissingCostEntry naming the pair when an attribute has no entry.
  double change_cost(std::string_view provider, std::string_view role) const;

  /// Entries are non-negative, tiers agree with the catalog and every offered
  /// (provider, role) pair is covered for every attribute.
  void validate(const ServiceCatalog& catalog) const;

  bool operator==(const CostModel&) const = default;
};

struct CostEstimate {
  std::string option_id;
  std::vector<std::pair<std::string, double>> per_change;  // role -> cost
  double estimated_cost = 0.0;
};

CostEstimate estimate_cost(const Configuration& current, const Configuration& option, const CostModel& model,
                           const ServiceCatalog& catalog);

}  // namespace bcr
