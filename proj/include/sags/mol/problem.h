#pragma once

#include <functional>
#include <unordered_map>

#include "sags/core/objective_report.h"
#include "sags/core/rng.h"
#include "sags/mol/context_model.h"
#include "sags/mol/objective.h"
#include "sags/mol/proposal.h"

namespace sags::mol {

struct MolGraphHash {
  std::size_t operator()(const MolGraph& g) const noexcept;
};

// Molecule optimization problem for one input molecule. Caches objective
// values per exact graph; create one per run.
class GraphProblem {
 public:
  using State = MolGraph;

  GraphProblem(const NodeContextModel& model, MolGraph original, GraphObjectiveConfig objective,
               GraphProposalConfig proposal);

  const MolGraph& initial_state() const noexcept { return objective_.original(); }
  double objective(const MolGraph& candidate);
  ObjectiveReport report(const MolGraph& candidate) const { return objective_.report(candidate); }
  MolGraph propose(const MolGraph& current, CounterRng& rng);

  const GraphObjective& scorer() const noexcept { return objective_; }

 private:
  const NodeContextModel& model_;
  GraphObjective objective_;
  GraphProposalConfig proposal_;
  std::unordered_map<MolGraph, double, MolGraphHash> cache_;
};

// Graph crossover for the genetic mode: a breadth-first prefix of `a` joined
// by a single bond to the largest component of the matching breadth-first
// suffix of `b`.
MolGraph crossover_graphs(const MolGraph& a, const MolGraph& b, CounterRng& rng);

}  // namespace sags::mol
