#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sags/mol/mol_graph.h"

namespace sags::mol {

class Fingerprint {
 public:
  explicit Fingerprint(std::size_t bits);

  std::size_t size() const noexcept { return bits_; }
  void set(std::size_t bit);
  bool test(std::size_t bit) const;
  std::size_t popcount() const noexcept;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

 private:
  std::size_t bits_;
  std::vector<std::uint64_t> words_;
};

// Morgan/ECFP-style fingerprint. Radius-0 identifiers hash (element, degree,
// charge, hydrogens); each further round rehashes an atom's identifier with
// its sorted (bond order, neighbor identifier) pairs. Every identifier of
// every round sets bit (id mod bits).
Fingerprint morgan_fingerprint(const MolGraph& graph, int radius = 2, std::size_t bits = 2048);

// |a & b| / |a | b|; 1 when both are empty. Throws ConfigError on a width
// mismatch.
double tanimoto(const Fingerprint& a, const Fingerprint& b);

}  // namespace sags::mol
