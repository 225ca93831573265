#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sags/core/error.h"
#include "sags/mol/mol_graph.h"

namespace sags::mol {

class ValenceError : public Error {
 public:
  ValenceError(const std::string& what, int atom) : Error(what), atom_(atom) {}
  int atom() const noexcept { return atom_; }

 private:
  int atom_;
};

class RingClosureError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Parses the SMILES subset documented in docs/smiles_subset.md. Aromatic
// rings are kekulized; hydrogens of unbracketed atoms fill the default
// valence. Throws ParseError (byte offset), RingClosureError or ValenceError.
MolGraph parse_smiles(std::string_view text);

// Canonical-order kekulé SMILES: a depth-first walk from the lowest-ranked
// atom visiting neighbors in rank order.
std::string write_smiles(const MolGraph& graph);

// Canonical ranks from iterative refinement of atom invariants with
// deterministic tie breaking; rank 0 is the root for writing.
std::vector<int> canonical_ranks(const MolGraph& graph);

}  // namespace sags::mol
