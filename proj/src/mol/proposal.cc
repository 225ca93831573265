#include "sags/mol/proposal.h"

#include <algorithm>
#include <cmath>

#include "sags/core/error.h"
#include "sags/mol/edits.h"

namespace sags::mol {

void GraphProposalConfig::validate() const {
  if (top_k == 0) throw ConfigError("top_k must be positive");
  double sum = 0.0;
  for (double w : op_weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw ConfigError("operation weights must be finite and >= 0");
    sum += w;
  }
  if (!(sum > 0.0)) throw ConfigError("operation weights must not all be zero");
}

std::vector<double> softmax_weights(std::span<const double> scores) {
  double top = -INFINITY;
  for (double s : scores) {
    if (std::isfinite(s)) top = std::max(top, s);
  }
  if (!std::isfinite(top)) return {};
  std::vector<double> w(scores.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    w[i] = std::isfinite(scores[i]) ? std::exp(scores[i] - top) : 0.0;
    sum += w[i];
  }
  for (double& x : w) x /= sum;
  return w;
}

MolGraph propose_graph_edit(const MolGraph& graph, CounterRng& rng, const NodeContextModel& model,
                            const GraphProposalConfig& config, const GraphObjectiveFn& objective) {
  const auto op = static_cast<GraphEditOp>(rng.categorical(config.op_weights));
  const auto atom = static_cast<int>(rng.uniform_index(graph.atom_count()));
  const auto elements = rank_candidates(graph, atom, op, model, config.top_k);
  auto candidates = enumerate_edits(graph, atom, op, elements);
  if (candidates.empty()) return graph;
  std::vector<double> scores(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) scores[i] = objective(candidates[i]);
  const auto weights = softmax_weights(scores);
  if (weights.empty()) return graph;
  return std::move(candidates[rng.categorical(weights)]);
}

}  // namespace sags::mol
