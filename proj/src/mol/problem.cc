#include "sags/mol/problem.h"

#include <algorithm>
#include <queue>

#include "sags/core/rng.h"
#include "sags/mol/edits.h"

namespace sags::mol {

std::size_t MolGraphHash::operator()(const MolGraph& g) const noexcept {
  std::uint64_t h = mix64(g.atom_count());
  for (const Atom& a : g.atoms()) {
    h = mix64(h ^ ((std::uint64_t{index_of(a.element)} << 16) | (static_cast<std::uint64_t>(a.charge + 8) << 8) |
                   static_cast<std::uint64_t>(a.hydrogens)));
  }
  for (const Bond& b : g.bonds()) {
    h = mix64(h ^ ((static_cast<std::uint64_t>(b.a) << 34) | (static_cast<std::uint64_t>(b.b) << 4) |
                   static_cast<std::uint64_t>(b.order)));
  }
  return static_cast<std::size_t>(h);
}

GraphProblem::GraphProblem(const NodeContextModel& model, MolGraph original, GraphObjectiveConfig objective,
                           GraphProposalConfig proposal)
    : model_(model), objective_(std::move(original), objective), proposal_(proposal) {
  proposal_.validate();
}

double GraphProblem::objective(const MolGraph& candidate) {
  if (const auto it = cache_.find(candidate); it != cache_.end()) return it->second;
  const double value = objective_(candidate);
  cache_.emplace(candidate, value);
  return value;
}

MolGraph GraphProblem::propose(const MolGraph& current, CounterRng& rng) {
  return propose_graph_edit(current, rng, model_, proposal_,
                            [this](const MolGraph& candidate) { return objective(candidate); });
}

namespace {

std::vector<int> bfs_order(const MolGraph& g, int root) {
  std::vector<int> order;
  std::vector<bool> seen(g.atom_count(), false);
  std::queue<int> queue;
  queue.push(root);
  seen[static_cast<std::size_t>(root)] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    order.push_back(v);
    for (const auto& nb : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(nb.atom)]) {
        seen[static_cast<std::size_t>(nb.atom)] = true;
        queue.push(nb.atom);
      }
    }
  }
  return order;
}

}  // namespace

MolGraph crossover_graphs(const MolGraph& a, const MolGraph& b, CounterRng& rng) {
  if (a.atom_count() < 2 || b.atom_count() < 2) return a;
  const auto order_a = bfs_order(a, static_cast<int>(rng.uniform_index(a.atom_count())));
  const auto order_b = bfs_order(b, static_cast<int>(rng.uniform_index(b.atom_count())));
  const std::size_t cut_a = 1 + rng.uniform_index(order_a.size() - 1);
  const std::size_t cut_b = 1 + rng.uniform_index(order_b.size() - 1);

  std::vector<int> head(order_a.begin(), order_a.begin() + static_cast<std::ptrdiff_t>(cut_a));
  std::sort(head.begin(), head.end());
  std::vector<int> tail(order_b.begin() + static_cast<std::ptrdiff_t>(cut_b), order_b.end());
  std::sort(tail.begin(), tail.end());

  // A breadth-first prefix is always connected; the suffix may not be.
  MolGraph child = a.induced(head);
  const MolGraph piece = largest_component(b.induced(tail));
  const int offset = static_cast<int>(child.atom_count());
  for (const Atom& atom : piece.atoms()) child.add_atom(atom);
  for (const Bond& bond : piece.bonds()) child.add_bond(bond.a + offset, bond.b + offset, bond.order);
  const int anchor = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(offset)));
  const int joined = offset + static_cast<int>(rng.uniform_index(piece.atom_count()));
  child.add_bond(anchor, joined, 1);
  for (int i = 0; i < static_cast<int>(child.atom_count()); ++i) child.atom(i).fixed_hydrogens = false;
  child.fill_hydrogens();
  return child;
}

}  // namespace sags::mol
