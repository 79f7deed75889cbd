#include "bcr/risk.hpp"

#include <algorithm>
#include <cmath>

#include "bcr/error.hpp"

namespace bcr {

const RiskRating& RiskMetricTable::rate(std::string_view key) const {
  auto it = rows.find(std::string(key));
  if (it == rows.end()) throw Error(ErrorCode::UnratedTier, "no risk rating for '" + std::string(key) + "'");
  return it->second;
}

std::pair<double, int> rate_service(const ConcreteService& service, const ServiceProvider& provider,
                                    const RiskMetricTable& table) {
  if (service.provider != provider.id) {
    throw Error(ErrorCode::InvalidModel, "service '" + service.id + "' is not offered by '" + provider.id + "'");
  }
  const auto& row = table.rate(to_string(provider.sla_tier));
  return {row.likelihood, row.consequence};
}

RiskMatrix::RiskMatrix(std::vector<std::vector<int>> cells) : cells_(std::move(cells)) {
  auto fail = [](const std::string& m) { throw Error(ErrorCode::InvalidModel, "risk matrix " + m); };
  if (cells_.empty() || cells_.front().empty()) fail("is empty");
  const auto width = cells_.front().size();
  for (std::size_t l = 0; l < cells_.size(); ++l) {
    if (cells_[l].size() != width) fail("rows differ in length");
    for (std::size_t c = 0; c < width; ++c) {
      if (cells_[l][c] < 1) fail("levels start at 1");
      if (l > 0 && cells_[l][c] < cells_[l - 1][c]) fail("decreases along the likelihood axis");
      if (c > 0 && cells_[l][c] < cells_[l][c - 1]) fail("decreases along the consequence axis");
    }
  }
}

RiskMatrix RiskMatrix::default_4x4() {
  // Only (2,2) = II and (1,2) = I are pinned; the rest is a monotone diagonal band.
  return RiskMatrix({{1, 1, 2, 3}, {1, 2, 3, 4}, {2, 3, 4, 5}, {3, 4, 5, 5}});
}

RiskMatrix RiskMatrix::default_3x3() { return RiskMatrix({{1, 1, 2}, {1, 2, 3}, {2, 3, 3}}); }

int RiskMatrix::lookup(int likelihood, int consequence) const {
  if (likelihood < 1 || likelihood > likelihood_levels() || consequence < 1 || consequence > consequence_levels()) {
    throw Error(ErrorCode::OutOfAxis, "cell (" + std::to_string(likelihood) + "," + std::to_string(consequence) +
                                          ") outside a " + std::to_string(likelihood_levels()) + "x" +
                                          std::to_string(consequence_levels()) + " matrix");
  }
  return cells_[static_cast<std::size_t>(likelihood - 1)][static_cast<std::size_t>(consequence - 1)];
}

int matrix_lookup(const RiskMatrix& matrix, int likelihood, int consequence) {
  return matrix.lookup(likelihood, consequence);
}

std::string_view to_string(Rounding rounding) {
  switch (rounding) {
    case Rounding::HalfUp: return "halfUp";
    case Rounding::HalfDown: return "halfDown";
    case Rounding::HalfEven: return "halfEven";
  }
  return "halfUp";
}

std::optional<Rounding> parse_rounding(std::string_view text) {
  for (auto r : {Rounding::HalfUp, Rounding::HalfDown, Rounding::HalfEven}) {
    if (to_string(r) == text) return r;
  }
  return std::nullopt;
}

int combine_likelihood(std::span<const double> ratings, int axis_levels, Rounding rounding) {
  if (ratings.empty()) throw Error(ErrorCode::EmptyRatings, "no likelihood ratings to combine");
  double sum = 0.0;
  for (double r : ratings) sum += r;
  double rounded = 0.0;
  switch (rounding) {
    case Rounding::HalfUp: rounded = std::floor(sum + 0.5); break;
    case Rounding::HalfDown: rounded = std::ceil(sum - 0.5); break;
    case Rounding::HalfEven: rounded = std::nearbyint(sum); break;
  }
  return std::clamp(static_cast<int>(rounded), 1, std::max(axis_levels, 1));
}

int combine_consequence(std::span<const int> ratings) {
  if (ratings.empty()) throw Error(ErrorCode::EmptyRatings, "no consequence ratings to combine");
  return *std::max_element(ratings.begin(), ratings.end());
}

std::string_view to_string(RiskAttributeModel::Source source) {
  switch (source) {
    case RiskAttributeModel::Source::ServiceTiers: return "serviceTiers";
    case RiskAttributeModel::Source::External: return "external";
    case RiskAttributeModel::Source::UncertaintyBands: return "uncertaintyBands";
  }
  return "serviceTiers";
}

std::optional<RiskAttributeModel::Source> parse_risk_source(std::string_view text) {
  using S = RiskAttributeModel::Source;
  for (auto s : {S::ServiceTiers, S::External, S::UncertaintyBands}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

void RiskModel::validate() const {
  auto fail = [](const std::string& m) { throw Error(ErrorCode::InvalidModel, m); };
  if (attributes.empty()) fail("risk model has no attributes");
  double total = 0.0;
  for (const auto& a : attributes) {
    if (!(a.weight >= 0.0)) fail("risk attribute '" + a.id + "' has a negative weight");
    total += a.weight;
    const int n = a.matrix.likelihood_levels();
    const int m = a.matrix.consequence_levels();
    switch (a.source) {
      case RiskAttributeModel::Source::ServiceTiers:
        if (n == 0) fail("risk attribute '" + a.id + "' needs a matrix");
        if (a.table.rows.empty()) fail("risk attribute '" + a.id + "' needs a metric table");
        for (const auto& [key, row] : a.table.rows) {
          if (!(row.likelihood > 0.0)) fail("likelihood for '" + key + "' must be positive");
          if (row.consequence < 1 || row.consequence > m) fail("consequence for '" + key + "' is off the matrix axis");
        }
        break;
      case RiskAttributeModel::Source::External:
        for (const auto& [option, level] : a.levels) {
          if (level < 1) fail("risk level for '" + option + "' must be >= 1");
        }
        if (a.default_level && *a.default_level < 1) fail("default risk level must be >= 1");
        break;
      case RiskAttributeModel::Source::UncertaintyBands:
        if (n == 0) fail("risk attribute '" + a.id + "' needs a matrix");
        if (a.uncertainty.empty() || a.quality.empty() || a.bands.empty()) {
          fail("risk attribute '" + a.id + "' needs an uncertainty, a quality and bands");
        }
        for (const auto& [level, l] : a.likelihood_by_level) {
          if (l < 1 || l > n) fail("likelihood for level '" + level + "' is off the matrix axis");
        }
        for (const auto& b : a.bands) {
          if (b.consequence < 1 || b.consequence > m) fail("band consequence is off the matrix axis");
        }
        break;
    }
  }
  if (std::abs(total - 1.0) > 1e-9) fail("risk attribute weights sum to " + std::to_string(total));
  if (veto_threshold && std::isnan(*veto_threshold)) fail("veto threshold is NaN");
}

namespace {

AttributeRisk rate_tiers(const Configuration& option, const RiskAttributeModel& a, Rounding rounding,
                         const RiskContext& ctx) {
  if (!ctx.catalog) throw Error(ErrorCode::InvalidModel, "tier-rated risk needs a service catalog");
  std::vector<double> likelihoods;
  std::vector<int> consequences;
  for (const auto& [role, service_id] : option.bindings) {
    if (!a.rated_roles.empty() && std::find(a.rated_roles.begin(), a.rated_roles.end(), role) == a.rated_roles.end()) {
      continue;
    }
    const auto& service = ctx.catalog->service(service_id);
    auto [l, c] = rate_service(service, ctx.catalog->provider_of(service), a.table);
    likelihoods.push_back(l);
    consequences.push_back(c);
  }
  AttributeRisk out;
  out.likelihood = combine_likelihood(likelihoods, a.matrix.likelihood_levels(), rounding);
  out.consequence = combine_consequence(consequences);
  out.level = a.matrix.lookup(*out.likelihood, *out.consequence);
  return out;
}

AttributeRisk rate_bands(const RiskAttributeModel& a, const RiskContext& ctx) {
  if (!ctx.uncertainty || !ctx.qualities) {
    throw Error(ErrorCode::InvalidModel, "banded risk needs uncertainty levels and quality estimates");
  }
  auto lvl = ctx.uncertainty->levels.find(a.uncertainty);
  if (lvl == ctx.uncertainty->levels.end()) {
    throw Error(ErrorCode::MissingAttribute, "no level for uncertainty '" + a.uncertainty + "'");
  }
  auto lik = a.likelihood_by_level.find(lvl->second);
  if (lik == a.likelihood_by_level.end()) {
    throw Error(ErrorCode::UnratedTier, "no likelihood for " + a.uncertainty + " level '" + lvl->second + "'");
  }
  auto q = ctx.qualities->find(a.quality);
  if (q == ctx.qualities->end()) throw Error(ErrorCode::MissingAttribute, "no estimate for '" + a.quality + "'");

  AttributeRisk out;
  out.likelihood = lik->second;
  for (const auto& band : a.bands) {
    if (!band.max || q->second <= *band.max) {
      out.consequence = band.consequence;
      break;
    }
  }
  if (!out.consequence) throw Error(ErrorCode::OutOfAxis, "'" + a.quality + "' value falls outside every band");
  out.level = a.matrix.lookup(*out.likelihood, *out.consequence);
  return out;
}

}  // namespace

RiskEstimate estimate_risk(const Configuration& option, const RiskModel& model, const RiskContext& context,
                           const std::map<std::string, int>* supplied_levels) {
  RiskEstimate out;
  out.option_id = option.id;
  int max_level = 0;
  for (const auto& a : model.attributes) {
    AttributeRisk r;
    if (supplied_levels && supplied_levels->contains(a.id)) {
      r.level = supplied_levels->at(a.id);
      r.supplied = true;
    } else {
      switch (a.source) {
        case RiskAttributeModel::Source::ServiceTiers: r = rate_tiers(option, a, model.rounding, context); break;
        case RiskAttributeModel::Source::UncertaintyBands: r = rate_bands(a, context); break;
        case RiskAttributeModel::Source::External: {
          auto it = a.levels.find(option.id);
          if (it != a.levels.end()) {
            r.level = it->second;
          } else if (a.default_level) {
            r.level = *a.default_level;
          } else {
            throw Error(ErrorCode::MissingRiskLevel, "no '" + a.id + "' level for option '" + option.id + "'");
          }
          r.supplied = true;
          break;
        }
      }
    }
    out.estimated_risk += a.weight == 1.0 ? r.level : r.level * a.weight;
    max_level = std::max(max_level, r.level);
    out.per_attribute.emplace(a.id, r);
  }
  if (model.veto_threshold) {
    const double t = *model.veto_threshold;
    out.vetoed = model.veto_mode == VetoMode::OverallRisk ? out.estimated_risk > t : max_level > t;
  }
  return out;
}

std::vector<RiskEstimate> risk_veto(std::span<const RiskEstimate> estimates, double threshold) {
  std::vector<RiskEstimate> out;
  std::copy_if(estimates.begin(), estimates.end(), std::back_inserter(out),
               [&](const RiskEstimate& e) { return e.estimated_risk <= threshold; });
  return out;
}

}  // namespace bcr
