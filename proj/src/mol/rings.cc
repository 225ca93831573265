#include "sags/mol/rings.h"

#include <algorithm>
#include <cstdint>
#include <queue>

namespace sags::mol {
namespace {

using EdgeSet = std::vector<std::uint64_t>;

struct Candidate {
  std::vector<int> atoms;  // cycle order
  EdgeSet edges;
};

int edge_index(const MolGraph& g, int a, int b) {
  const int lo = std::min(a, b);
  const int hi = std::max(a, b);
  const auto bonds = g.bonds();
  const auto it = std::lower_bound(bonds.begin(), bonds.end(), std::pair(lo, hi),
                                   [](const Bond& x, std::pair<int, int> key) { return std::pair(x.a, x.b) < key; });
  return static_cast<int>(it - bonds.begin());
}

// Breadth-first parent tree from root; neighbors are visited in index order.
std::vector<int> bfs_parents(const MolGraph& g, int root) {
  std::vector<int> parent(g.atom_count(), -2);
  std::queue<int> queue;
  parent[static_cast<std::size_t>(root)] = -1;
  queue.push(root);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    std::vector<int> next;
    for (const auto& nb : g.neighbors(v)) next.push_back(nb.atom);
    std::sort(next.begin(), next.end());
    for (int u : next) {
      if (parent[static_cast<std::size_t>(u)] == -2) {
        parent[static_cast<std::size_t>(u)] = v;
        queue.push(u);
      }
    }
  }
  return parent;
}

// Atoms from x back to the root, x first.
std::vector<int> path_to_root(const std::vector<int>& parent, int x) {
  std::vector<int> path;
  for (int v = x; v >= 0; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  return path;
}

bool reduce(EdgeSet& v, const std::vector<EdgeSet>& basis, const std::vector<std::size_t>& pivots) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::size_t p = pivots[i];
    if ((v[p / 64] >> (p % 64)) & 1U) {
      for (std::size_t w = 0; w < v.size(); ++w) v[w] ^= basis[i][w];
    }
  }
  for (std::size_t w = 0; w < v.size(); ++w) {
    if (v[w] != 0) return true;
  }
  return false;
}

std::size_t lowest_bit(const EdgeSet& v) {
  for (std::size_t w = 0; w < v.size(); ++w) {
    if (v[w] != 0) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(v[w]));
  }
  return 0;
}

}  // namespace

std::size_t RingInfo::largest_ring() const {
  std::size_t best = 0;
  for (const auto& r : rings) best = std::max(best, r.size());
  return best;
}

RingInfo find_rings(const MolGraph& g) {
  const int n = static_cast<int>(g.atom_count());
  RingInfo info;
  info.membership.assign(g.atom_count(), 0);
  const int m = static_cast<int>(g.bond_count());
  const int cyclomatic = m - n + static_cast<int>(g.components().size());
  if (n == 0 || cyclomatic <= 0) return info;

  const std::size_t words = (static_cast<std::size_t>(m) + 63) / 64;
  std::vector<Candidate> candidates;
  for (int root = 0; root < n; ++root) {
    const auto parent = bfs_parents(g, root);
    for (const Bond& bond : g.bonds()) {
      if (parent[static_cast<std::size_t>(bond.a)] == -2) continue;
      auto px = path_to_root(parent, bond.a);
      auto py = path_to_root(parent, bond.b);
      // Cycle: root .. x, y .. root (root only once).
      std::vector<int> cycle(px.rbegin(), px.rend());
      cycle.insert(cycle.end(), py.begin(), py.end() - 1);
      if (cycle.size() < 3) continue;
      auto sorted = cycle;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;

      Candidate c;
      c.edges.assign(words, 0);
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int e = edge_index(g, cycle[i], cycle[(i + 1) % cycle.size()]);
        c.edges[static_cast<std::size_t>(e) / 64] |= std::uint64_t{1} << (e % 64);
      }
      c.atoms = std::move(cycle);
      candidates.push_back(std::move(c));
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
    if (x.atoms.size() != y.atoms.size()) return x.atoms.size() < y.atoms.size();
    return x.edges < y.edges;
  });

  std::vector<EdgeSet> basis;
  std::vector<std::size_t> pivots;
  for (const Candidate& c : candidates) {
    if (static_cast<int>(info.rings.size()) == cyclomatic) break;
    EdgeSet v = c.edges;
    if (!reduce(v, basis, pivots)) continue;
    const std::size_t p = lowest_bit(v);
    // Keep the basis fully reduced on its pivots.
    for (auto& row : basis) {
      if ((row[p / 64] >> (p % 64)) & 1U) {
        for (std::size_t w = 0; w < words; ++w) row[w] ^= v[w];
      }
    }
    basis.push_back(std::move(v));
    pivots.push_back(p);
    info.rings.push_back(c.atoms);
    for (int a : c.atoms) ++info.membership[static_cast<std::size_t>(a)];
  }
  return info;
}

std::vector<bool> perceive_aromatic_atoms(const MolGraph& g, const RingInfo& rings) {
  std::vector<bool> aromatic(g.atom_count(), false);
  auto in_ring_system = [&](int a) { return rings.membership[static_cast<std::size_t>(a)] > 0; };
  auto has_ring_double = [&](int a) {
    for (const auto& nb : g.neighbors(a)) {
      if (nb.order == 2 && in_ring_system(nb.atom)) return true;
    }
    return false;
  };
  for (const auto& ring : rings.rings) {
    if (ring.size() != 5 && ring.size() != 6) continue;
    int missing = 0;
    bool ok = true;
    for (int a : ring) {
      if (has_ring_double(a)) continue;
      const Element e = g.atom(a).element;
      const bool donor = e == Element::N || e == Element::O || e == Element::S;
      if (ring.size() == 5 && donor && missing == 0) {
        ++missing;
        continue;
      }
      ok = false;
      break;
    }
    if (ring.size() == 5 && missing != 1) ok = false;
    if (!ok) continue;
    for (int a : ring) aromatic[static_cast<std::size_t>(a)] = true;
  }
  return aromatic;
}

}  // namespace sags::mol
