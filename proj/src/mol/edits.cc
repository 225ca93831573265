#include "sags/mol/edits.h"

#include <algorithm>
#include <optional>

#include "sags/core/error.h"
#include "sags/mol/rings.h"
#include "sags/mol/smiles.h"

namespace sags::mol {

std::string_view to_string(GraphEditOp op) {
  switch (op) {
    case GraphEditOp::kReplace:
      return "replace";
    case GraphEditOp::kInsert:
      return "insert";
    case GraphEditOp::kDelete:
      return "delete";
  }
  return "?";
}

MolGraph largest_component(const MolGraph& graph) {
  const auto parts = graph.components();
  if (parts.size() <= 1) return graph;
  std::size_t best_size = 0;
  for (const auto& p : parts) best_size = std::max(best_size, p.size());
  std::optional<MolGraph> best;
  std::string best_key;
  for (const auto& p : parts) {
    if (p.size() != best_size) continue;
    MolGraph sub = graph.induced(p);
    std::string key = write_smiles(sub);
    if (!best || key < best_key) {
      best = std::move(sub);
      best_key = std::move(key);
    }
  }
  return *best;
}

std::vector<MolGraph> enumerate_edits(const MolGraph& graph, int atom, GraphEditOp op,
                                      std::span<const Element> elements) {
  if (atom < 0 || static_cast<std::size_t>(atom) >= graph.atom_count()) {
    throw ConfigError("edit position " + std::to_string(atom) + " out of range");
  }
  std::vector<MolGraph> out;
  switch (op) {
    case GraphEditOp::kReplace:
      for (Element e : elements) {
        MolGraph g = graph;
        Atom& a = g.atom(atom);
        a.element = e;
        a.charge = 0;
        a.fixed_hydrogens = false;
        g.fill_hydrogens();
        out.push_back(std::move(g));
      }
      break;
    case GraphEditOp::kInsert:
      for (Element e : elements) {
        MolGraph g = graph;
        const int added = g.add_atom(Atom{e, 0, 0, false});
        g.add_bond(atom, added, 1);
        g.fill_hydrogens();
        out.push_back(std::move(g));
      }
      break;
    case GraphEditOp::kDelete: {
      if (graph.atom_count() <= 1) break;
      MolGraph opened = largest_component(graph.without_atom(atom));
      opened.fill_hydrogens();
      const RingInfo rings = find_rings(graph);
      if (rings.membership[static_cast<std::size_t>(atom)] == 1) {
        const auto& ring = *std::find_if(rings.rings.begin(), rings.rings.end(), [&](const auto& r) {
          return std::find(r.begin(), r.end(), atom) != r.end();
        });
        const auto at = static_cast<std::size_t>(std::find(ring.begin(), ring.end(), atom) - ring.begin());
        int left = ring[(at + ring.size() - 1) % ring.size()];
        int right = ring[(at + 1) % ring.size()];
        // Indices shift down by one past the removed atom.
        if (left > atom) --left;
        if (right > atom) --right;
        MolGraph contracted = graph.without_atom(atom);
        if (ring.size() > 3 && contracted.bond_order(left, right) == 0) {
          contracted.add_bond(left, right, 1);
          contracted = largest_component(contracted);
          contracted.fill_hydrogens();
          out.push_back(std::move(opened));
          out.push_back(std::move(contracted));
          break;
        }
      }
      out.push_back(std::move(opened));
      break;
    }
  }
  return out;
}

}  // namespace sags::mol
