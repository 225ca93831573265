#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sags/mol/edits.h"
#include "sags/mol/element.h"
#include "sags/mol/mol_graph.h"

namespace sags::mol {

// Sorted neighbor elements and degree of a (possibly hypothetical) atom.
struct NodeContext {
  std::vector<Element> neighbors;
  int degree = 0;

  // "C.C.O/3"; "/0" for an isolated atom.
  std::string key() const;
  static NodeContext from_key(const std::string& key);

  friend bool operator==(const NodeContext&, const NodeContext&) = default;
};

NodeContext context_of(const MolGraph& graph, int atom);

// Count model p(element | neighbor multiset, degree) with Laplace smoothing
// (alpha = 1) over the element vocabulary.
class NodeContextModel {
 public:
  using Counts = std::array<std::uint64_t, kElementCount>;

  // Throws InputError on an empty corpus.
  static NodeContextModel train(std::span<const MolGraph> corpus);
  static NodeContextModel from_counts(std::map<std::string, Counts> counts);

  void add(const MolGraph& graph);
  void merge(const NodeContextModel& other);

  double probability(Element e, const NodeContext& context) const;
  // Elements by descending probability; ties keep vocabulary order.
  std::vector<Element> rank(const NodeContext& context, std::size_t k) const;

  const std::map<std::string, Counts>& counts() const noexcept { return counts_; }

  friend bool operator==(const NodeContextModel&, const NodeContextModel&) = default;

 private:
  std::map<std::string, Counts> counts_;
};

// Top-k elements for a replace at `atom` (its current neighborhood) or an
// insert onto `atom` (the new atom's neighborhood: degree 1, one neighbor).
std::vector<Element> rank_candidates(const MolGraph& graph, int atom, GraphEditOp op, const NodeContextModel& model,
                                     std::size_t k);

}  // namespace sags::mol
