#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "sags/core/rng.h"
#include "sags/mol/context_model.h"
#include "sags/mol/mol_graph.h"

namespace sags::mol {

struct GraphProposalConfig {
  std::size_t top_k = 5;
  // Probabilities of replace, insert, delete.
  std::array<double, 3> op_weights{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};

  void validate() const;
};

// exp(f_i) / sum exp(f_j), with -inf scores weighted 0. Empty when no score
// is finite.
std::vector<double> softmax_weights(std::span<const double> scores);

using GraphObjectiveFn = std::function<double(const MolGraph&)>;

// One graph edit: operation by op_weights, atom uniformly, candidates from
// enumerate_edits over the model's top-k elements, one candidate drawn by
// softmax of the objective. Returns the input when every candidate is
// invalid.
MolGraph propose_graph_edit(const MolGraph& graph, CounterRng& rng, const NodeContextModel& model,
                            const GraphProposalConfig& config, const GraphObjectiveFn& objective);

}  // namespace sags::mol
