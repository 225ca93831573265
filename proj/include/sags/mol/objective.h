#pragma once

#include <functional>
#include <span>

#include "sags/core/objective_report.h"
#include "sags/mol/fingerprint.h"
#include "sags/mol/mol_graph.h"

namespace sags::mol {

struct GraphObjectiveConfig {
  // Weight M of the similarity term.
  double sim_weight = 5.0;
  // Candidates need similarity strictly greater than this.
  double sim_threshold = 0.6;
  int radius = 2;
  std::size_t bits = 2048;

  void validate() const;
};

// plogp(x) + M * sim(x, x0) for candidates that are valence-valid and more
// similar to x0 than the threshold; -inf otherwise.
class GraphObjective {
 public:
  GraphObjective(MolGraph original, GraphObjectiveConfig config);

  double operator()(const MolGraph& candidate) const { return report(candidate).total; }
  ObjectiveReport report(const MolGraph& candidate) const;

  double similarity(const MolGraph& candidate) const;
  // Valence-valid and similarity > threshold.
  bool passes_gate(const MolGraph& candidate) const;

  const MolGraph& original() const noexcept { return original_; }
  const GraphObjectiveConfig& config() const noexcept { return config_; }

 private:
  MolGraph original_;
  GraphObjectiveConfig config_;
  Fingerprint original_fp_;
};

double graph_objective(const MolGraph& candidate, const MolGraph& original, const GraphObjectiveConfig& config);

// A property scorer mapping a molecule into [0, 1].
using Scorer = std::function<double(const MolGraph&)>;

// Geometric mean of the scorers, behind the same validity/similarity gate
// as graph_objective (-inf when the gate fails).
double multi_objective(const MolGraph& candidate, const MolGraph& original, std::span<const Scorer> scorers,
                       const GraphObjectiveConfig& config);

// clamp(plogp / max_value, 0, 1).
Scorer normalized_plogp_scorer(double max_value);

}  // namespace sags::mol
