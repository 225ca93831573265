#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sags/mol/element.h"

namespace sags::mol {

struct Atom {
  Element element = Element::C;
  int charge = 0;
  int hydrogens = 0;
  // Hydrogen count written explicitly (bracket atom); otherwise hydrogens
  // are recomputed from the default valence after every edit.
  bool fixed_hydrogens = false;

  friend bool operator==(const Atom&, const Atom&) = default;
};

struct Bond {
  int a = 0;  // a < b
  int b = 0;
  int order = 1;

  friend bool operator==(const Bond&, const Bond&) = default;
};

struct Neighbor {
  int atom;
  int order;
};

// Undirected labeled molecular graph with implicit hydrogens.
class MolGraph {
 public:
  MolGraph() = default;

  int add_atom(const Atom& atom);
  // Throws ConfigError on self-loops, duplicate bonds or orders outside 1..3.
  void add_bond(int a, int b, int order);
  void remove_bond(int a, int b);
  void set_bond_order(int a, int b, int order);

  std::size_t atom_count() const noexcept { return atoms_.size(); }
  std::size_t bond_count() const noexcept { return bonds_.size(); }
  const Atom& atom(int i) const { return atoms_.at(static_cast<std::size_t>(i)); }
  Atom& atom(int i) { return atoms_.at(static_cast<std::size_t>(i)); }
  std::span<const Atom> atoms() const noexcept { return atoms_; }
  std::span<const Bond> bonds() const noexcept { return bonds_; }
  std::span<const Neighbor> neighbors(int i) const { return adjacency_.at(static_cast<std::size_t>(i)); }

  int degree(int i) const { return static_cast<int>(neighbors(i).size()); }
  int bond_order_sum(int i) const;
  // 0 when there is no bond.
  int bond_order(int a, int b) const;

  // Recomputes hydrogens of every atom without fixed hydrogens.
  void fill_hydrogens();

  bool is_connected() const;
  // Connected components as sorted atom lists.
  std::vector<std::vector<int>> components() const;

  // Subgraph induced by `keep` (atom order preserved).
  MolGraph induced(std::span<const int> keep) const;
  // Copy without atom i; bonds to it are dropped.
  MolGraph without_atom(int i) const;

  friend bool operator==(const MolGraph& x, const MolGraph& y) {
    return x.atoms_ == y.atoms_ && x.bonds_ == y.bonds_;
  }

 private:
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

struct ValenceViolation {
  int atom;
  int total;    // bond orders + hydrogens
  int allowed;  // max valence for the atom's element and charge

  std::string describe(const MolGraph& graph) const;
};

// Atoms whose bond-order sum plus hydrogens exceeds the maximum valence.
std::vector<ValenceViolation> validate_valence(const MolGraph& graph);

}  // namespace sags::mol
