#include "sags/mol/objective.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sags/core/error.h"
#include "sags/mol/plogp.h"

namespace sags::mol {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

void GraphObjectiveConfig::validate() const {
  if (!(sim_weight >= 0.0) || !std::isfinite(sim_weight)) throw ConfigError("sim_weight must be finite and >= 0");
  if (!(sim_threshold >= 0.0 && sim_threshold <= 1.0)) throw ConfigError("sim_threshold must lie in [0, 1]");
  if (radius < 0) throw ConfigError("fingerprint radius must be >= 0");
  if (bits == 0) throw ConfigError("fingerprint bits must be positive");
}

GraphObjective::GraphObjective(MolGraph original, GraphObjectiveConfig config)
    : original_(std::move(original)),
      config_(config),
      original_fp_((config.validate(), morgan_fingerprint(original_, config.radius, config.bits))) {}

double GraphObjective::similarity(const MolGraph& candidate) const {
  return tanimoto(morgan_fingerprint(candidate, config_.radius, config_.bits), original_fp_);
}

bool GraphObjective::passes_gate(const MolGraph& candidate) const {
  return candidate.atom_count() > 0 && candidate.is_connected() && validate_valence(candidate).empty() &&
         similarity(candidate) > config_.sim_threshold;
}

ObjectiveReport GraphObjective::report(const MolGraph& candidate) const {
  ObjectiveReport out;
  if (candidate.atom_count() == 0 || !candidate.is_connected() || !validate_valence(candidate).empty()) {
    out.total = kNegInf;
    out.terms = {{"valid", 0.0}};
    return out;
  }
  const double sim = similarity(candidate);
  if (!(sim > config_.sim_threshold)) {
    out.total = kNegInf;
    out.terms = {{"valid", 1.0}, {"sim", sim}};
    return out;
  }
  const double plogp = surrogate_plogp(candidate);
  out.total = plogp + config_.sim_weight * sim;
  out.terms = {{"valid", 1.0}, {"sim", sim}, {"plogp", plogp}};
  return out;
}

double graph_objective(const MolGraph& candidate, const MolGraph& original, const GraphObjectiveConfig& config) {
  return GraphObjective(original, config)(candidate);
}

double multi_objective(const MolGraph& candidate, const MolGraph& original, std::span<const Scorer> scorers,
                       const GraphObjectiveConfig& config) {
  if (scorers.empty()) throw ConfigError("multi_objective needs at least one scorer");
  const GraphObjective gate(original, config);
  if (!gate.passes_gate(candidate)) return kNegInf;
  double log_sum = 0.0;
  for (const auto& scorer : scorers) {
    const double s = scorer(candidate);
    if (!(s >= 0.0 && s <= 1.0)) throw ConfigError("scorer output outside [0, 1]");
    if (s == 0.0) return 0.0;
    log_sum += std::log(s);
  }
  return std::exp(log_sum / static_cast<double>(scorers.size()));
}

Scorer normalized_plogp_scorer(double max_value) {
  if (!(max_value > 0.0)) throw ConfigError("normalization maximum must be positive");
  return [max_value](const MolGraph& g) { return std::clamp(surrogate_plogp(g) / max_value, 0.0, 1.0); };
}

}  // namespace sags::mol
