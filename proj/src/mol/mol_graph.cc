#include "sags/mol/mol_graph.h"

#include <algorithm>
#include <numeric>

#include "sags/core/error.h"

namespace sags::mol {

int MolGraph::add_atom(const Atom& atom) {
  atoms_.push_back(atom);
  adjacency_.emplace_back();
  return static_cast<int>(atoms_.size()) - 1;
}

void MolGraph::add_bond(int a, int b, int order) {
  const int n = static_cast<int>(atoms_.size());
  if (a < 0 || b < 0 || a >= n || b >= n) throw ConfigError("bond endpoint out of range");
  if (a == b) throw ConfigError("self-loop on atom " + std::to_string(a));
  if (order < 1 || order > 3) throw ConfigError("bond order must be 1, 2 or 3");
  if (bond_order(a, b) != 0) {
    throw ConfigError("duplicate bond " + std::to_string(a) + "-" + std::to_string(b));
  }
  const Bond bond{std::min(a, b), std::max(a, b), order};
  bonds_.insert(std::lower_bound(bonds_.begin(), bonds_.end(), bond,
                                 [](const Bond& x, const Bond& y) {
                                   return std::pair(x.a, x.b) < std::pair(y.a, y.b);
                                 }),
                bond);
  adjacency_[static_cast<std::size_t>(a)].push_back({b, order});
  adjacency_[static_cast<std::size_t>(b)].push_back({a, order});
}

void MolGraph::remove_bond(int a, int b) {
  const int lo = std::min(a, b);
  const int hi = std::max(a, b);
  const auto it = std::find_if(bonds_.begin(), bonds_.end(), [&](const Bond& x) { return x.a == lo && x.b == hi; });
  if (it == bonds_.end()) throw ConfigError("no bond " + std::to_string(a) + "-" + std::to_string(b));
  bonds_.erase(it);
  auto drop = [](std::vector<Neighbor>& list, int other) {
    list.erase(std::find_if(list.begin(), list.end(), [&](const Neighbor& nb) { return nb.atom == other; }));
  };
  drop(adjacency_[static_cast<std::size_t>(a)], b);
  drop(adjacency_[static_cast<std::size_t>(b)], a);
}

void MolGraph::set_bond_order(int a, int b, int order) {
  if (order < 1 || order > 3) throw ConfigError("bond order must be 1, 2 or 3");
  const int lo = std::min(a, b);
  const int hi = std::max(a, b);
  const auto it = std::find_if(bonds_.begin(), bonds_.end(), [&](const Bond& x) { return x.a == lo && x.b == hi; });
  if (it == bonds_.end()) throw ConfigError("no bond " + std::to_string(a) + "-" + std::to_string(b));
  it->order = order;
  for (auto& nb : adjacency_[static_cast<std::size_t>(a)]) {
    if (nb.atom == b) nb.order = order;
  }
  for (auto& nb : adjacency_[static_cast<std::size_t>(b)]) {
    if (nb.atom == a) nb.order = order;
  }
}

int MolGraph::bond_order_sum(int i) const {
  int sum = 0;
  for (const auto& nb : neighbors(i)) sum += nb.order;
  return sum;
}

int MolGraph::bond_order(int a, int b) const {
  for (const auto& nb : neighbors(a)) {
    if (nb.atom == b) return nb.order;
  }
  return 0;
}

void MolGraph::fill_hydrogens() {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    Atom& atom = atoms_[i];
    if (atom.fixed_hydrogens) continue;
    atom.hydrogens = default_hydrogens(atom.element, atom.charge, bond_order_sum(static_cast<int>(i)));
  }
}

std::vector<std::vector<int>> MolGraph::components() const {
  const std::size_t n = atoms_.size();
  std::vector<int> label(n, -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    stack.push_back(static_cast<int>(s));
    label[s] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (const auto& nb : adjacency_[static_cast<std::size_t>(v)]) {
        if (label[static_cast<std::size_t>(nb.atom)] < 0) {
          label[static_cast<std::size_t>(nb.atom)] = id;
          stack.push_back(nb.atom);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool MolGraph::is_connected() const { return components().size() <= 1; }

MolGraph MolGraph::induced(std::span<const int> keep) const {
  std::vector<int> remap(atoms_.size(), -1);
  MolGraph out;
  for (int old : keep) {
    remap[static_cast<std::size_t>(old)] = out.add_atom(atoms_.at(static_cast<std::size_t>(old)));
  }
  for (const Bond& bond : bonds_) {
    const int a = remap[static_cast<std::size_t>(bond.a)];
    const int b = remap[static_cast<std::size_t>(bond.b)];
    if (a >= 0 && b >= 0) out.add_bond(a, b, bond.order);
  }
  return out;
}

MolGraph MolGraph::without_atom(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= atoms_.size()) throw ConfigError("atom index out of range");
  std::vector<int> keep;
  keep.reserve(atoms_.size());
  for (int k = 0; k < static_cast<int>(atoms_.size()); ++k) {
    if (k != i) keep.push_back(k);
  }
  return induced(keep);
}

std::string ValenceViolation::describe(const MolGraph& graph) const {
  const Atom& a = graph.atom(atom);
  std::string out = "atom " + std::to_string(atom) + " (" + std::string(symbol(a.element));
  if (a.charge > 0) out += "+" + std::to_string(a.charge);
  if (a.charge < 0) out += std::to_string(a.charge);
  out += ") has valence " + std::to_string(total) + ", max " + std::to_string(allowed);
  return out;
}

std::vector<ValenceViolation> validate_valence(const MolGraph& graph) {
  std::vector<ValenceViolation> out;
  for (int i = 0; i < static_cast<int>(graph.atom_count()); ++i) {
    const Atom& a = graph.atom(i);
    const int total = graph.bond_order_sum(i) + a.hydrogens;
    const int allowed = max_valence(a.element, a.charge);
    if (a.hydrogens < 0 || total > allowed) out.push_back({i, total, allowed});
  }
  return out;
}

}  // namespace sags::mol
