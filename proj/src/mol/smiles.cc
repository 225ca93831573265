#include "sags/mol/smiles.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <tuple>

#include "sags/mol/rings.h"

namespace sags::mol {
namespace {

constexpr int kAromaticBond = 4;  // parse-time marker, resolved by kekulization

struct ParsedAtom {
  Atom atom;
  bool aromatic = false;
  bool bracket = false;
  std::size_t offset = 0;
};

struct ParsedBond {
  int a;
  int b;
  int order;  // 1..3 or kAromaticBond
};

struct OpenRing {
  int atom;
  std::optional<int> order;
  std::size_t offset;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  void run() {
    if (text_.empty()) throw ParseError("empty SMILES", 0);
    int prev = -1;
    std::vector<int> branches;
    std::optional<int> pending;
    std::size_t pending_at = 0;

    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(') {
        if (prev < 0) throw ParseError("branch before any atom", pos_);
        if (pending) throw ParseError("bond symbol before branch", pending_at);
        branches.push_back(prev);
        ++pos_;
      } else if (c == ')') {
        if (branches.empty()) throw ParseError("unbalanced ')'", pos_);
        if (pending) throw ParseError("dangling bond symbol", pending_at);
        if (pos_ > 0 && text_[pos_ - 1] == '(') throw ParseError("empty branch", pos_);
        prev = branches.back();
        branches.pop_back();
        ++pos_;
      } else if (c == '-' || c == '=' || c == '#' || c == ':') {
        if (prev < 0) throw ParseError("bond symbol before any atom", pos_);
        if (pending) throw ParseError("two consecutive bond symbols", pos_);
        pending = c == '-' ? 1 : c == '=' ? 2 : c == '#' ? 3 : kAromaticBond;
        pending_at = pos_;
        ++pos_;
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '%') {
        if (prev < 0) throw ParseError("ring closure before any atom", pos_);
        const std::size_t at = pos_;
        const int label = ring_label();
        ring_closure(prev, label, pending, at);
        pending.reset();
      } else if (c == '.') {
        throw ParseError("disconnected structures are not supported", pos_);
      } else {
        const int atom = parse_atom();
        if (prev >= 0) {
          add_bond(prev, atom, pending ? *pending : implicit_order(prev, atom), pending ? pending_at : pos_);
        } else if (pending) {
          throw ParseError("bond symbol before any atom", pending_at);
        }
        pending.reset();
        prev = atom;
      }
    }
    if (pending) throw ParseError("dangling bond symbol", pending_at);
    if (!branches.empty()) throw ParseError("unclosed branch", text_.size());
    if (!open_.empty()) {
      const auto first = std::min_element(open_.begin(), open_.end(), [](const auto& x, const auto& y) {
        return x.second.offset < y.second.offset;
      });
      throw RingClosureError("unmatched ring closure " + std::to_string(first->first), first->second.offset);
    }
    if (atoms_.empty()) throw ParseError("no atoms", 0);
  }

  MolGraph build() {
    MolGraph graph;
    for (const auto& pa : atoms_) graph.add_atom(pa.atom);
    for (const auto& b : bonds_) graph.add_bond(b.a, b.b, b.order == kAromaticBond ? 1 : b.order);
    if (std::any_of(atoms_.begin(), atoms_.end(), [](const ParsedAtom& a) { return a.aromatic; })) {
      kekulize(graph);
    }
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (!atoms_[i].bracket) {
        Atom& a = graph.atom(static_cast<int>(i));
        a.hydrogens = default_hydrogens(a.element, a.charge, graph.bond_order_sum(static_cast<int>(i)));
      }
    }
    const auto violations = validate_valence(graph);
    if (!violations.empty()) {
      throw ValenceError("valence violation: " + violations.front().describe(graph), violations.front().atom);
    }
    return graph;
  }

 private:
  int implicit_order(int a, int b) const {
    return atoms_[static_cast<std::size_t>(a)].aromatic && atoms_[static_cast<std::size_t>(b)].aromatic
               ? kAromaticBond
               : 1;
  }

  void add_bond(int a, int b, int order, std::size_t offset) {
    if (a == b) throw ParseError("ring closure onto the same atom", offset);
    for (const auto& x : bonds_) {
      if ((x.a == a && x.b == b) || (x.a == b && x.b == a)) throw ParseError("duplicate bond", offset);
    }
    if (order == kAromaticBond &&
        !(atoms_[static_cast<std::size_t>(a)].aromatic && atoms_[static_cast<std::size_t>(b)].aromatic)) {
      throw ParseError("aromatic bond between non-aromatic atoms", offset);
    }
    bonds_.push_back({a, b, order});
  }

  int ring_label() {
    if (text_[pos_] != '%') return text_[pos_++] - '0';
    const std::size_t at = pos_;
    if (pos_ + 2 >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_ + 2]))) {
      throw ParseError("'%' must be followed by two digits", at);
    }
    const int label = (text_[pos_ + 1] - '0') * 10 + (text_[pos_ + 2] - '0');
    pos_ += 3;
    return label;
  }

  void ring_closure(int atom, int label, std::optional<int> order, std::size_t offset) {
    const auto it = open_.find(label);
    if (it == open_.end()) {
      open_.emplace(label, OpenRing{atom, order, offset});
      return;
    }
    const OpenRing ring = it->second;
    open_.erase(it);
    if (ring.order && order && *ring.order != *order) {
      throw RingClosureError("conflicting bond symbols on ring closure " + std::to_string(label), offset);
    }
    const auto chosen = order ? order : ring.order;
    add_bond(ring.atom, atom, chosen ? *chosen : implicit_order(ring.atom, atom), offset);
  }

  int parse_atom() {
    ParsedAtom pa;
    pa.offset = pos_;
    if (text_[pos_] == '[') {
      parse_bracket(pa);
    } else {
      parse_organic(pa);
    }
    atoms_.push_back(pa);
    return static_cast<int>(atoms_.size()) - 1;
  }

  void parse_organic(ParsedAtom& pa) {
    const std::size_t at = pos_;
    if (text_.substr(pos_, 2) == "Cl" || text_.substr(pos_, 2) == "Br") {
      pa.atom.element = *element_from_symbol(text_.substr(pos_, 2));
      pos_ += 2;
      return;
    }
    const char c = text_[pos_];
    if (const auto e = aromatic_element(c)) {
      pa.atom.element = *e;
      pa.aromatic = true;
      ++pos_;
      return;
    }
    const auto e = element_from_symbol(text_.substr(pos_, 1));
    if (!e) throw ParseError(std::string("unexpected character '") + c + "'", at);
    pa.atom.element = *e;
    ++pos_;
  }

  static std::optional<Element> aromatic_element(char c) {
    switch (c) {
      case 'c':
        return Element::C;
      case 'n':
        return Element::N;
      case 'o':
        return Element::O;
      case 's':
        return Element::S;
      default:
        return std::nullopt;
    }
  }

  void parse_bracket(ParsedAtom& pa) {
    const std::size_t open = pos_++;
    pa.bracket = true;
    pa.atom.fixed_hydrogens = true;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("isotopes are not supported", pos_);
    }
    if (pos_ >= text_.size()) throw ParseError("unterminated bracket atom", open);
    if (const auto e = aromatic_element(text_[pos_])) {
      pa.atom.element = *e;
      pa.aromatic = true;
      ++pos_;
    } else {
      std::size_t len = 1;
      if (pos_ + 1 < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_ + 1]))) len = 2;
      auto found = element_from_symbol(text_.substr(pos_, len));
      if (!found && len == 2) {
        len = 1;
        found = element_from_symbol(text_.substr(pos_, 1));
      }
      if (!found) throw ParseError("unknown element in bracket atom", pos_);
      pa.atom.element = *found;
      pos_ += len;
    }
    if (pos_ < text_.size() && text_[pos_] == '@') throw ParseError("stereochemistry is not supported", pos_);
    if (pos_ < text_.size() && text_[pos_] == 'H') {
      ++pos_;
      int h = 1;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) h = text_[pos_++] - '0';
      pa.atom.hydrogens = h;
    }
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      const char sign = text_[pos_++];
      int magnitude = 1;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        magnitude = text_[pos_++] - '0';
      } else {
        while (pos_ < text_.size() && text_[pos_] == sign) {
          ++magnitude;
          ++pos_;
        }
      }
      if (magnitude > 3) throw ParseError("charge out of range", pos_ - 1);
      pa.atom.charge = sign == '+' ? magnitude : -magnitude;
    }
    if (pos_ >= text_.size() || text_[pos_] != ']') throw ParseError("expected ']'", pos_);
    ++pos_;
  }

  // Aromatic atoms with room for one more bond order take a ring double
  // bond; aromatic O and S never do. Aromatic bonds count as single here.
  bool needs_double(const ParsedAtom& pa, int explicit_valence) const {
    if (!pa.aromatic) return false;
    const Atom& a = pa.atom;
    if (a.element == Element::O || a.element == Element::S) return false;
    const int used = explicit_valence + (pa.bracket ? a.hydrogens : 0);
    return used + 1 <= max_valence(a.element, a.charge);
  }

  void kekulize(MolGraph& graph) {
    const RingInfo rings = find_rings(graph);
    const int n = static_cast<int>(atoms_.size());
    for (int i = 0; i < n; ++i) {
      if (atoms_[static_cast<std::size_t>(i)].aromatic && rings.membership[static_cast<std::size_t>(i)] == 0) {
        throw ParseError("aromatic atom outside a ring", atoms_[static_cast<std::size_t>(i)].offset);
      }
    }
    std::vector<bool> need(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) need[static_cast<std::size_t>(i)] = needs_double(atoms_[static_cast<std::size_t>(i)], graph.bond_order_sum(i));

    std::vector<std::vector<int>> options(static_cast<std::size_t>(n));
    for (const auto& b : bonds_) {
      if (b.order != kAromaticBond) continue;
      if (need[static_cast<std::size_t>(b.a)] && need[static_cast<std::size_t>(b.b)]) {
        options[static_cast<std::size_t>(b.a)].push_back(b.b);
        options[static_cast<std::size_t>(b.b)].push_back(b.a);
      }
    }
    for (auto& o : options) std::sort(o.begin(), o.end());

    std::vector<int> mate(static_cast<std::size_t>(n), -1);
    if (!match(need, options, mate)) {
      const auto first = std::find_if(atoms_.begin(), atoms_.end(), [](const ParsedAtom& a) { return a.aromatic; });
      throw ParseError("aromatic system cannot be kekulized", first->offset);
    }
    for (int i = 0; i < n; ++i) {
      const int j = mate[static_cast<std::size_t>(i)];
      if (j > i) graph.set_bond_order(i, j, 2);
    }
  }

  // Backtracking perfect matching over atoms that need a double bond,
  // branching on the unmatched atom with the fewest free partners.
  static bool match(const std::vector<bool>& need, const std::vector<std::vector<int>>& options,
                    std::vector<int>& mate) {
    int pick = -1;
    std::size_t fewest = 0;
    for (std::size_t i = 0; i < need.size(); ++i) {
      if (!need[i] || mate[i] >= 0) continue;
      std::size_t free = 0;
      for (int j : options[i]) free += mate[static_cast<std::size_t>(j)] < 0 ? 1 : 0;
      if (pick < 0 || free < fewest) {
        pick = static_cast<int>(i);
        fewest = free;
      }
    }
    if (pick < 0) return true;
    if (fewest == 0) return false;
    for (int j : options[static_cast<std::size_t>(pick)]) {
      if (mate[static_cast<std::size_t>(j)] >= 0) continue;
      mate[static_cast<std::size_t>(pick)] = j;
      mate[static_cast<std::size_t>(j)] = pick;
      if (match(need, options, mate)) return true;
      mate[static_cast<std::size_t>(pick)] = -1;
      mate[static_cast<std::size_t>(j)] = -1;
    }
    return false;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<ParsedAtom> atoms_;
  std::vector<ParsedBond> bonds_;
  std::map<int, OpenRing> open_;
};

// Dense ranks of keys, ties sharing a rank.
template <class Key>
std::vector<int> dense_ranks(const std::vector<Key>& keys) {
  std::vector<int> order(keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return keys[static_cast<std::size_t>(x)] < keys[static_cast<std::size_t>(y)]; });
  std::vector<int> rank(keys.size(), 0);
  int r = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && keys[static_cast<std::size_t>(order[k - 1])] < keys[static_cast<std::size_t>(order[k])]) ++r;
    rank[static_cast<std::size_t>(order[k])] = r;
  }
  return rank;
}

int class_count(const std::vector<int>& rank) {
  return rank.empty() ? 0 : *std::max_element(rank.begin(), rank.end()) + 1;
}

std::vector<int> refine(const MolGraph& g, std::vector<int> rank) {
  for (;;) {
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> keys(rank.size());
    for (std::size_t i = 0; i < rank.size(); ++i) {
      keys[i].first = rank[i];
      for (const auto& nb : g.neighbors(static_cast<int>(i))) {
        keys[i].second.emplace_back(nb.order, rank[static_cast<std::size_t>(nb.atom)]);
      }
      std::sort(keys[i].second.begin(), keys[i].second.end());
    }
    auto next = dense_ranks(keys);
    if (class_count(next) == class_count(rank)) return next;
    rank = std::move(next);
  }
}

std::string atom_text(const MolGraph& g, int i) {
  const Atom& a = g.atom(i);
  const std::string sym(symbol(a.element));
  if (a.charge == 0 && a.hydrogens == default_hydrogens(a.element, 0, g.bond_order_sum(i))) return sym;
  std::string out = "[" + sym;
  if (a.hydrogens > 0) {
    out += "H";
    if (a.hydrogens > 1) out += std::to_string(a.hydrogens);
  }
  if (a.charge != 0) {
    out += a.charge > 0 ? "+" : "-";
    const int magnitude = a.charge > 0 ? a.charge : -a.charge;
    if (magnitude > 1) out += std::to_string(magnitude);
  }
  return out + "]";
}

std::string bond_text(int order) {
  switch (order) {
    case 2:
      return "=";
    case 3:
      return "#";
    default:
      return "";
  }
}

std::string ring_digit(int d) { return d < 10 ? std::to_string(d) : "%" + std::to_string(d); }

class Writer {
 public:
  Writer(const MolGraph& g, std::vector<int> rank) : g_(g), rank_(std::move(rank)) {
    const std::size_t n = g.atom_count();
    order_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto& list = order_[i];
      for (const auto& nb : g.neighbors(static_cast<int>(i))) list.push_back(nb.atom);
      std::sort(list.begin(), list.end(), [&](int x, int y) {
        return rank_[static_cast<std::size_t>(x)] < rank_[static_cast<std::size_t>(y)];
      });
    }
    discovery_.assign(n, -1);
    children_.resize(n);
    opens_.resize(n);
    closes_.resize(n);
  }

  std::string write() {
    const auto root = static_cast<int>(std::min_element(rank_.begin(), rank_.end()) - rank_.begin());
    discover(root, -1);
    std::string out;
    emit(root, out);
    return out;
  }

 private:
  void discover(int v, int parent) {
    discovery_[static_cast<std::size_t>(v)] = counter_++;
    for (int u : order_[static_cast<std::size_t>(v)]) {
      if (u == parent) continue;
      if (discovery_[static_cast<std::size_t>(u)] < 0) {
        children_[static_cast<std::size_t>(v)].push_back(u);
        discover(u, v);
      } else if (discovery_[static_cast<std::size_t>(u)] < discovery_[static_cast<std::size_t>(v)]) {
        opens_[static_cast<std::size_t>(u)].push_back(v);
        closes_[static_cast<std::size_t>(v)].push_back(u);
      }
    }
  }

  void emit(int v, std::string& out) {
    out += atom_text(g_, v);
    for (int u : closes_[static_cast<std::size_t>(v)]) {
      const auto key = std::pair(u, v);
      const int d = digits_.at(key);
      digits_.erase(key);
      in_use_.erase(d);
      out += ring_digit(d);
    }
    auto opens = opens_[static_cast<std::size_t>(v)];
    std::sort(opens.begin(), opens.end(), [&](int x, int y) {
      return discovery_[static_cast<std::size_t>(x)] < discovery_[static_cast<std::size_t>(y)];
    });
    for (int w : opens) {
      int d = 1;
      while (in_use_.count(d) != 0) ++d;
      in_use_.insert(d);
      digits_[std::pair(v, w)] = d;
      out += bond_text(g_.bond_order(v, w)) + ring_digit(d);
    }
    const auto& kids = children_[static_cast<std::size_t>(v)];
    for (std::size_t k = 0; k < kids.size(); ++k) {
      const bool branch = k + 1 < kids.size();
      if (branch) out += "(";
      out += bond_text(g_.bond_order(v, kids[k]));
      emit(kids[k], out);
      if (branch) out += ")";
    }
  }

  const MolGraph& g_;
  std::vector<int> rank_;
  std::vector<std::vector<int>> order_;
  std::vector<int> discovery_;
  int counter_ = 0;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> opens_;
  std::vector<std::vector<int>> closes_;
  std::map<std::pair<int, int>, int> digits_;
  std::set<int> in_use_;
};

}  // namespace

MolGraph parse_smiles(std::string_view text) {
  Parser parser(text);
  parser.run();
  return parser.build();
}

std::vector<int> canonical_ranks(const MolGraph& g) {
  const std::size_t n = g.atom_count();
  if (n == 0) return {};
  const RingInfo rings = find_rings(g);
  std::vector<std::tuple<int, int, int, int, int, int>> invariants(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = static_cast<int>(i);
    const Atom& a = g.atom(v);
    invariants[i] = {static_cast<int>(index_of(a.element)), a.charge, g.degree(v), a.hydrogens,
                     g.bond_order_sum(v), rings.membership[i] > 0 ? 1 : 0};
  }
  auto rank = refine(g, dense_ranks(invariants));
  while (class_count(rank) < static_cast<int>(n)) {
    // Split the lowest tied class by promoting its lowest-index member.
    std::vector<int> size(n, 0);
    for (int r : rank) ++size[static_cast<std::size_t>(r)];
    int tied = 0;
    while (size[static_cast<std::size_t>(tied)] < 2) ++tied;
    std::vector<int> doubled(n);
    bool split = false;
    for (std::size_t i = 0; i < n; ++i) {
      doubled[i] = 2 * rank[i] + 1;
      if (!split && rank[i] == tied) {
        doubled[i] = 2 * rank[i];
        split = true;
      }
    }
    rank = refine(g, dense_ranks(doubled));
  }
  return rank;
}

std::string write_smiles(const MolGraph& g) {
  if (g.atom_count() == 0) return "";
  if (!g.is_connected()) throw ConfigError("cannot write a disconnected graph as SMILES");
  return Writer(g, canonical_ranks(g)).write();
}

}  // namespace sags::mol
