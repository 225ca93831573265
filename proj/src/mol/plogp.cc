#include "sags/mol/plogp.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "sags/core/error.h"
#include "sags/embedded_data.h"
#include "sags/mol/rings.h"

namespace sags::mol {

ContributionTable ContributionTable::read(std::istream& in) {
  ContributionTable table;
  bool have_penalty = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string head;
    fields >> head;
    if (head == "charge_penalty") {
      if (!(fields >> table.charge_penalty_)) {
        throw FormatError("contribution table line " + std::to_string(line_no) + ": bad charge penalty");
      }
      have_penalty = true;
      continue;
    }
    const auto e = element_from_symbol(head);
    int aromatic = 0;
    int hetero = 0;
    double value = 0.0;
    if (!e || !(fields >> aromatic >> hetero >> value) || aromatic < 0 || aromatic > 1 || hetero < 0 || hetero > 2) {
      throw FormatError("contribution table line " + std::to_string(line_no) + ": malformed entry");
    }
    const auto ei = index_of(*e);
    table.values_[ei][static_cast<std::size_t>(aromatic)][static_cast<std::size_t>(hetero)] = value;
    table.present_[ei][static_cast<std::size_t>(aromatic)][static_cast<std::size_t>(hetero)] = true;
  }
  if (!have_penalty) throw FormatError("contribution table has no charge_penalty line");
  for (std::size_t ei = 0; ei < kElementCount; ++ei) {
    for (std::size_t h = 0; h < 3; ++h) {
      if (!table.present_[ei][0][h]) {
        throw FormatError("contribution table is missing " + std::string(symbol(kAllElements[ei])) +
                          " aliphatic entry " + std::to_string(h));
      }
    }
  }
  return table;
}

ContributionTable ContributionTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read(in);
}

const ContributionTable& ContributionTable::builtin() {
  static const ContributionTable table = [] {
    std::istringstream in{std::string(data::kPlogpContributions)};
    return read(in);
  }();
  return table;
}

double ContributionTable::atom(Element e, bool aromatic, int hetero_neighbors) const {
  const auto ei = index_of(e);
  const auto h = static_cast<std::size_t>(std::clamp(hetero_neighbors, 0, 2));
  const std::size_t a = aromatic && present_[ei][1][h] ? 1 : 0;
  return values_[ei][a][h];
}

PlogpBreakdown surrogate_plogp_breakdown(const MolGraph& g, const ContributionTable& table) {
  const RingInfo rings = find_rings(g);
  const auto aromatic = perceive_aromatic_atoms(g, rings);
  PlogpBreakdown out;
  int crowded = 0;
  for (int i = 0; i < static_cast<int>(g.atom_count()); ++i) {
    const Atom& a = g.atom(i);
    int hetero = 0;
    for (const auto& nb : g.neighbors(i)) hetero += is_heteroatom(g.atom(nb.atom).element) ? 1 : 0;
    out.atoms += table.atom(a.element, aromatic[static_cast<std::size_t>(i)], hetero);
    if (a.charge != 0) out.atoms -= table.charge_penalty();
    if (g.degree(i) >= 4) ++crowded;
  }
  out.ring_penalty = std::max(0.0, static_cast<double>(rings.largest_ring()) - 6.0);
  out.sa_penalty = 0.1 * static_cast<double>(rings.rings.size()) + 0.05 * crowded;
  out.total = out.atoms - out.ring_penalty - out.sa_penalty;
  return out;
}

double surrogate_plogp(const MolGraph& g, const ContributionTable& table) {
  return surrogate_plogp_breakdown(g, table).total;
}

}  // namespace sags::mol
