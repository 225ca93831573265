#include "sags/mol/element.h"

#include <algorithm>
#include <cstdlib>

namespace sags::mol {
namespace {

constexpr std::array<std::string_view, kElementCount> kSymbols{"B", "C", "N", "O", "P", "S", "F", "Cl", "Br", "I"};

// Valence lists by element for charges -1, 0, +1. Larger |charge| falls back
// to the arithmetic rule in allowed_valences.
struct ValenceRow {
  std::array<int, 3> values;
  std::size_t count;
};

constexpr std::array<ValenceRow, kElementCount> kNeutral{{
    {{3, 0, 0}, 1},  // B
    {{4, 0, 0}, 1},  // C
    {{3, 0, 0}, 1},  // N
    {{2, 0, 0}, 1},  // O
    {{3, 5, 0}, 2},  // P
    {{2, 4, 6}, 3},  // S
    {{1, 0, 0}, 1},  // F
    {{1, 0, 0}, 1},  // Cl
    {{1, 0, 0}, 1},  // Br
    {{1, 0, 0}, 1},  // I
}};

// Shifted tables for every charge in [-3, 3], built once.
struct ShiftedTable {
  std::array<std::array<std::array<int, 3>, 7>, kElementCount> values{};
  std::array<std::array<std::size_t, 7>, kElementCount> counts{};
};

constexpr int shift_for(Element e, int charge) {
  switch (e) {
    case Element::B:
      return -charge;
    case Element::C:
      return -(charge < 0 ? -charge : charge);
    default:
      return charge;
  }
}

constexpr ShiftedTable build_table() {
  ShiftedTable t{};
  for (std::size_t ei = 0; ei < kElementCount; ++ei) {
    for (int q = -3; q <= 3; ++q) {
      const auto qi = static_cast<std::size_t>(q + 3);
      const int shift = shift_for(kAllElements[ei], q);
      std::size_t n = 0;
      for (std::size_t j = 0; j < kNeutral[ei].count; ++j) {
        const int v = kNeutral[ei].values[j] + shift;
        if (v >= 0) t.values[ei][qi][n++] = v;
      }
      t.counts[ei][qi] = n;
    }
  }
  return t;
}

constexpr ShiftedTable kTable = build_table();

}  // namespace

std::string_view symbol(Element e) noexcept { return kSymbols[index_of(e)]; }

std::optional<Element> element_from_symbol(std::string_view s) noexcept {
  for (std::size_t i = 0; i < kElementCount; ++i) {
    if (kSymbols[i] == s) return kAllElements[i];
  }
  return std::nullopt;
}

bool is_heteroatom(Element e) noexcept { return e != Element::C; }

std::span<const int> allowed_valences(Element e, int charge) noexcept {
  if (charge < -3 || charge > 3) return {};
  const auto qi = static_cast<std::size_t>(charge + 3);
  const auto ei = index_of(e);
  return {kTable.values[ei][qi].data(), kTable.counts[ei][qi]};
}

int max_valence(Element e, int charge) noexcept {
  const auto v = allowed_valences(e, charge);
  return v.empty() ? -1 : v.back();
}

int default_hydrogens(Element e, int charge, int bond_order_sum) noexcept {
  for (int v : allowed_valences(e, charge)) {
    if (v >= bond_order_sum) return v - bond_order_sum;
  }
  return 0;
}

}  // namespace sags::mol
