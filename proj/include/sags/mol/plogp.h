#pragma once

#include <array>
#include <filesystem>
#include <istream>

#include "sags/mol/element.h"
#include "sags/mol/mol_graph.h"

namespace sags::mol {

// Per-atom hydrophobicity contributions keyed by element, aromaticity and
// the number of heteroatom neighbors (0, 1, 2 or more), plus a penalty per
// charged atom. The bundled table is data/plogp_contributions.tsv.
class ContributionTable {
 public:
  static const ContributionTable& builtin();
  static ContributionTable read(std::istream& in);
  static ContributionTable load(const std::filesystem::path& path);

  double atom(Element e, bool aromatic, int hetero_neighbors) const;
  double charge_penalty() const noexcept { return charge_penalty_; }

 private:
  // [element][aromatic][min(hetero, 2)]
  std::array<std::array<std::array<double, 3>, 2>, kElementCount> values_{};
  std::array<std::array<std::array<bool, 3>, 2>, kElementCount> present_{};
  double charge_penalty_ = 0.0;
};

struct PlogpBreakdown {
  double atoms = 0.0;         // sum of atom contributions minus charge penalties
  double ring_penalty = 0.0;  // max(0, largest ring - 6)
  double sa_penalty = 0.0;    // 0.1 * rings + 0.05 * atoms of degree >= 4
  double total = 0.0;
};

// Additive stand-in for penalized logP: atom contributions minus a ring-size
// penalty and a synthetic-accessibility penalty. Invariant under atom
// reindexing.
PlogpBreakdown surrogate_plogp_breakdown(const MolGraph& graph,
                                         const ContributionTable& table = ContributionTable::builtin());
double surrogate_plogp(const MolGraph& graph, const ContributionTable& table = ContributionTable::builtin());

}  // namespace sags::mol
