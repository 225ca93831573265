#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace sags::mol {

// The organic subset handled by the graph domain, in vocabulary order.
enum class Element : std::uint8_t { B, C, N, O, P, S, F, Cl, Br, I };

inline constexpr std::size_t kElementCount = 10;
inline constexpr std::array<Element, kElementCount> kAllElements{
    Element::B, Element::C, Element::N,  Element::O,  Element::P,
    Element::S, Element::F, Element::Cl, Element::Br, Element::I};

std::string_view symbol(Element e) noexcept;
std::optional<Element> element_from_symbol(std::string_view symbol) noexcept;
inline std::size_t index_of(Element e) noexcept { return static_cast<std::size_t>(e); }

bool is_heteroatom(Element e) noexcept;

// Allowed total valences (bond orders + hydrogens) for an atom with the
// given formal charge, ascending. Neutral: B 3, C 4, N 3, O 2, P {3,5},
// S {2,4,6}, halogens 1. A charge shifts group 15-17 valences by +q
// (N+ 4, O- 1), carbon by -|q| and boron by -q.
std::span<const int> allowed_valences(Element e, int charge) noexcept;
int max_valence(Element e, int charge) noexcept;

// Hydrogens that complete the smallest allowed valence >= bond_order_sum;
// 0 when bond_order_sum already exceeds every allowed valence.
int default_hydrogens(Element e, int charge, int bond_order_sum) noexcept;

}  // namespace sags::mol
