#include "sags/mol/context_model.h"

#include <algorithm>
#include <numeric>

#include "sags/core/error.h"

namespace sags::mol {

std::string NodeContext::key() const {
  std::string out;
  for (std::size_t i = 0; i < neighbors.size(); ++i) {
    if (i > 0) out += '.';
    out += symbol(neighbors[i]);
  }
  return out + "/" + std::to_string(degree);
}

NodeContext NodeContext::from_key(const std::string& key) {
  const auto slash = key.rfind('/');
  if (slash == std::string::npos) throw FormatError("context key without '/': " + key);
  NodeContext ctx;
  try {
    std::size_t used = 0;
    ctx.degree = std::stoi(key.substr(slash + 1), &used);
    if (used != key.size() - slash - 1 || ctx.degree < 0) throw FormatError("");
  } catch (const std::exception&) {
    throw FormatError("bad degree in context key: " + key);
  }
  std::size_t start = 0;
  const std::string list = key.substr(0, slash);
  while (start < list.size()) {
    auto end = list.find('.', start);
    if (end == std::string::npos) end = list.size();
    const auto e = element_from_symbol(std::string_view(list).substr(start, end - start));
    if (!e) throw FormatError("bad element in context key: " + key);
    ctx.neighbors.push_back(*e);
    start = end + 1;
  }
  if (!std::is_sorted(ctx.neighbors.begin(), ctx.neighbors.end())) {
    throw FormatError("context key neighbors not sorted: " + key);
  }
  return ctx;
}

NodeContext context_of(const MolGraph& graph, int atom) {
  NodeContext ctx;
  for (const auto& nb : graph.neighbors(atom)) ctx.neighbors.push_back(graph.atom(nb.atom).element);
  std::sort(ctx.neighbors.begin(), ctx.neighbors.end());
  ctx.degree = graph.degree(atom);
  return ctx;
}

NodeContextModel NodeContextModel::train(std::span<const MolGraph> corpus) {
  if (corpus.empty()) throw InputError("context model needs a non-empty corpus");
  NodeContextModel model;
  for (const auto& g : corpus) model.add(g);
  return model;
}

NodeContextModel NodeContextModel::from_counts(std::map<std::string, Counts> counts) {
  for (const auto& [key, c] : counts) NodeContext::from_key(key);
  NodeContextModel model;
  model.counts_ = std::move(counts);
  return model;
}

void NodeContextModel::add(const MolGraph& graph) {
  for (int i = 0; i < static_cast<int>(graph.atom_count()); ++i) {
    auto& row = counts_[context_of(graph, i).key()];
    ++row[index_of(graph.atom(i).element)];
  }
}

void NodeContextModel::merge(const NodeContextModel& other) {
  for (const auto& [key, c] : other.counts_) {
    auto& row = counts_[key];
    for (std::size_t e = 0; e < kElementCount; ++e) row[e] += c[e];
  }
}

double NodeContextModel::probability(Element e, const NodeContext& context) const {
  const auto it = counts_.find(context.key());
  if (it == counts_.end()) return 1.0 / static_cast<double>(kElementCount);
  const auto& row = it->second;
  const double total = static_cast<double>(std::accumulate(row.begin(), row.end(), std::uint64_t{0}));
  return (static_cast<double>(row[index_of(e)]) + 1.0) / (total + static_cast<double>(kElementCount));
}

std::vector<Element> NodeContextModel::rank(const NodeContext& context, std::size_t k) const {
  std::array<std::uint64_t, kElementCount> row{};
  if (const auto it = counts_.find(context.key()); it != counts_.end()) row = it->second;
  std::vector<Element> out(kAllElements.begin(), kAllElements.end());
  // Probabilities share one denominator, so counts order them.
  std::stable_sort(out.begin(), out.end(), [&](Element a, Element b) { return row[index_of(a)] > row[index_of(b)]; });
  out.resize(std::min(k, out.size()));
  return out;
}

std::vector<Element> rank_candidates(const MolGraph& graph, int atom, GraphEditOp op, const NodeContextModel& model,
                                     std::size_t k) {
  if (atom < 0 || static_cast<std::size_t>(atom) >= graph.atom_count()) {
    throw ConfigError("rank position " + std::to_string(atom) + " out of range");
  }
  NodeContext ctx;
  switch (op) {
    case GraphEditOp::kReplace:
      ctx = context_of(graph, atom);
      break;
    case GraphEditOp::kInsert:
      ctx.neighbors = {graph.atom(atom).element};
      ctx.degree = 1;
      break;
    case GraphEditOp::kDelete:
      return {};
  }
  return model.rank(ctx, k);
}

}  // namespace sags::mol
