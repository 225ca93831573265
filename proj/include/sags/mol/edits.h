#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "sags/mol/element.h"
#include "sags/mol/mol_graph.h"

namespace sags::mol {

enum class GraphEditOp { kReplace = 0, kInsert = 1, kDelete = 2 };

std::string_view to_string(GraphEditOp op);

// Candidates for one edit at `atom` (0-based).
//   replace: one per element, bonds kept, charge reset to 0.
//   insert:  one per element, a new atom single-bonded to `atom`.
//   delete:  an atom in exactly one ring with two ring neighbors gives two
//            candidates, ring opened and ring contracted (neighbors joined by
//            a single bond); any other atom gives one. When a deletion
//            disconnects the graph the largest component is kept, ties going
//            to the lexicographically smallest canonical SMILES.
// Hydrogens are refilled on every candidate. Throws ConfigError when `atom`
// is out of range.
std::vector<MolGraph> enumerate_edits(const MolGraph& graph, int atom, GraphEditOp op,
                                      std::span<const Element> elements);

// Keeps the largest connected component (same tie rule as above).
MolGraph largest_component(const MolGraph& graph);

}  // namespace sags::mol
