#pragma once

#include <vector>

#include "sags/mol/mol_graph.h"

namespace sags::mol {

// Smallest set of smallest rings: a minimum cycle basis built from Horton
// candidate cycles. Each ring lists its atoms in cycle order.
struct RingInfo {
  std::vector<std::vector<int>> rings;
  // Number of SSSR rings containing each atom.
  std::vector<int> membership;

  std::size_t largest_ring() const;
};

RingInfo find_rings(const MolGraph& graph);

// Atoms of 5- and 6-membered rings whose every atom carries a double bond
// inside the ring system; a 5-ring may have one N, O or S without one.
std::vector<bool> perceive_aromatic_atoms(const MolGraph& graph, const RingInfo& rings);

}  // namespace sags::mol
