#include "sags/mol/fingerprint.h"

#include <algorithm>
#include <bit>

#include "sags/core/error.h"
#include "sags/core/rng.h"

namespace sags::mol {

Fingerprint::Fingerprint(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {
  if (bits == 0) throw ConfigError("fingerprint width must be positive");
}

void Fingerprint::set(std::size_t bit) {
  if (bit >= bits_) throw ConfigError("fingerprint bit out of range");
  words_[bit / 64] |= std::uint64_t{1} << (bit % 64);
}

bool Fingerprint::test(std::size_t bit) const {
  if (bit >= bits_) throw ConfigError("fingerprint bit out of range");
  return ((words_[bit / 64] >> (bit % 64)) & 1U) != 0;
}

std::size_t Fingerprint::popcount() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

Fingerprint morgan_fingerprint(const MolGraph& g, int radius, std::size_t bits) {
  if (radius < 0) throw ConfigError("fingerprint radius must be nonnegative");
  Fingerprint fp(bits);
  const std::size_t n = g.atom_count();
  std::vector<std::uint64_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = static_cast<int>(i);
    const Atom& a = g.atom(v);
    const std::uint64_t packed = (std::uint64_t{index_of(a.element)} << 32) |
                                 (static_cast<std::uint64_t>(g.degree(v)) << 24) |
                                 (static_cast<std::uint64_t>(a.charge + 8) << 16) |
                                 static_cast<std::uint64_t>(a.hydrogens);
    ids[i] = mix64(packed);
    fp.set(ids[i] % bits);
  }
  std::vector<std::pair<int, std::uint64_t>> env;
  for (int r = 1; r <= radius; ++r) {
    std::vector<std::uint64_t> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      env.clear();
      for (const auto& nb : g.neighbors(static_cast<int>(i))) env.emplace_back(nb.order, ids[static_cast<std::size_t>(nb.atom)]);
      std::sort(env.begin(), env.end());
      std::uint64_t h = mix64(ids[i] ^ static_cast<std::uint64_t>(r));
      for (const auto& [order, id] : env) h = mix64(h ^ mix64(id + static_cast<std::uint64_t>(order)));
      next[i] = h;
      fp.set(h % bits);
    }
    ids = std::move(next);
  }
  return fp;
}

double tanimoto(const Fingerprint& a, const Fingerprint& b) {
  if (a.size() != b.size()) throw ConfigError("fingerprint widths differ");
  std::size_t both = 0;
  std::size_t any = 0;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    both += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
    any += static_cast<std::size_t>(std::popcount(wa[i] | wb[i]));
  }
  return any == 0 ? 1.0 : static_cast<double>(both) / static_cast<double>(any);
}

}  // namespace sags::mol
