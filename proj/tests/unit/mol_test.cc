#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "sags/core/annealer.h"
#include "sags/core/error.h"
#include "sags/core/rng.h"
#include "sags/mol/context_model.h"
#include "sags/mol/edits.h"
#include "sags/mol/element.h"
#include "sags/mol/fingerprint.h"
#include "sags/mol/mol_graph.h"
#include "sags/mol/objective.h"
#include "sags/mol/plogp.h"
#include "sags/mol/problem.h"
#include "sags/mol/proposal.h"
#include "sags/mol/rings.h"
#include "sags/mol/smiles.h"
#include "test_support.h"

namespace sags::mol {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::string> smiles_file(const char* name) {
  std::ifstream in(test::data_path(name));
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

std::vector<int> shuffled_indices(std::size_t n, CounterRng& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

int count_bonds_of_order(const MolGraph& g, int order) {
  return static_cast<int>(std::count_if(g.bonds().begin(), g.bonds().end(),
                                        [&](const Bond& b) { return b.order == order; }));
}

TEST(Element, ValenceTable) {
  EXPECT_EQ(max_valence(Element::C, 0), 4);
  EXPECT_EQ(max_valence(Element::N, 0), 3);
  EXPECT_EQ(max_valence(Element::N, 1), 4);
  EXPECT_EQ(max_valence(Element::O, -1), 1);
  EXPECT_EQ(max_valence(Element::S, 0), 6);
  EXPECT_EQ(max_valence(Element::P, 0), 5);
  EXPECT_EQ(max_valence(Element::B, 0), 3);
  for (Element e : {Element::F, Element::Cl, Element::Br, Element::I}) EXPECT_EQ(max_valence(e, 0), 1);
  EXPECT_EQ(default_hydrogens(Element::S, 0, 3), 1);
  EXPECT_EQ(default_hydrogens(Element::C, 0, 5), 0);
  for (Element e : kAllElements) EXPECT_EQ(element_from_symbol(symbol(e)), e);
  EXPECT_FALSE(element_from_symbol("Xe").has_value());
}

TEST(ParseSmiles, Ethanol) {
  const auto g = parse_smiles("CCO");
  ASSERT_EQ(g.atom_count(), 3u);
  EXPECT_EQ(g.atom(0).element, Element::C);
  EXPECT_EQ(g.atom(2).element, Element::O);
  EXPECT_EQ(std::vector<Bond>(g.bonds().begin(), g.bonds().end()), (std::vector<Bond>{{0, 1, 1}, {1, 2, 1}}));
  EXPECT_EQ(g.atom(0).hydrogens, 3);
  EXPECT_EQ(g.atom(1).hydrogens, 2);
  EXPECT_EQ(g.atom(2).hydrogens, 1);
}

TEST(ParseSmiles, Cyclohexane) {
  const auto g = parse_smiles("C1CCCCC1");
  EXPECT_EQ(g.atom_count(), 6u);
  EXPECT_EQ(g.bond_count(), 6u);
  const auto rings = find_rings(g);
  ASSERT_EQ(rings.rings.size(), 1u);
  EXPECT_EQ(rings.rings[0].size(), 6u);
  for (int i = 0; i < 6; ++i) EXPECT_EQ(g.atom(i).hydrogens, 2);
}

TEST(ParseSmiles, Errors) {
  try {
    parse_smiles("C(C)(C)(C)(C)C");
    FAIL() << "expected a valence error";
  } catch (const ValenceError& e) {
    EXPECT_EQ(e.atom(), 0);
  }
  EXPECT_THROW(parse_smiles("C1CC"), RingClosureError);
  try {
    parse_smiles("CXC");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
  EXPECT_THROW(parse_smiles("C.C"), ParseError);
  EXPECT_THROW(parse_smiles("[13C]"), ParseError);
  EXPECT_THROW(parse_smiles("C[C@H](N)O"), ParseError);
  EXPECT_THROW(parse_smiles("C(C"), ParseError);
  EXPECT_THROW(parse_smiles("cc"), ParseError);
  EXPECT_THROW(parse_smiles(""), ParseError);
}

TEST(ParseSmiles, BracketAtomsAndBonds) {
  const auto g = parse_smiles("C[N+](C)(C)C");
  EXPECT_EQ(g.atom(1).charge, 1);
  EXPECT_TRUE(validate_valence(g).empty());
  const auto oxide = parse_smiles("C[O-]");
  EXPECT_EQ(oxide.atom(1).charge, -1);
  EXPECT_EQ(oxide.atom(1).hydrogens, 0);
  const auto nh = parse_smiles("[NH2]C");
  EXPECT_EQ(nh.atom(0).hydrogens, 2);
  EXPECT_TRUE(nh.atom(0).fixed_hydrogens);
  const auto nitrile = parse_smiles("CC#N");
  EXPECT_EQ(nitrile.bond_order(1, 2), 3);
  EXPECT_EQ(nitrile.atom(2).hydrogens, 0);
  const auto big = parse_smiles("C%12CCCC%12");
  EXPECT_EQ(big.bond_count(), 5u);
  const auto doubled = parse_smiles("[O--]");
  EXPECT_EQ(doubled.atom(0).charge, -2);
}

TEST(ParseSmiles, AromaticRingsAreKekulized) {
  const auto benzene = parse_smiles("c1ccccc1");
  EXPECT_EQ(count_bonds_of_order(benzene, 2), 3);
  for (int i = 0; i < 6; ++i) EXPECT_EQ(benzene.atom(i).hydrogens, 1);
  const auto pyrrole = parse_smiles("c1cc[nH]c1");
  EXPECT_EQ(count_bonds_of_order(pyrrole, 2), 2);
  const auto furan = parse_smiles("c1ccoc1");
  EXPECT_EQ(count_bonds_of_order(furan, 2), 2);
  const auto caffeine = parse_smiles("Cn1cnc2c1c(=O)n(C)c(=O)n2C");
  EXPECT_TRUE(validate_valence(caffeine).empty());
  const auto naphthalene = parse_smiles("c1ccc2ccccc2c1");
  EXPECT_EQ(count_bonds_of_order(naphthalene, 2), 5);
  EXPECT_EQ(find_rings(naphthalene).rings.size(), 2u);
  EXPECT_THROW(parse_smiles("c1cccc1"), ParseError);
}

TEST(WriteSmiles, Examples) {
  EXPECT_EQ(write_smiles(parse_smiles("C")), "C");
  EXPECT_EQ(write_smiles(MolGraph{}), "");
  const auto ethanol = parse_smiles("OCC");
  EXPECT_TRUE(test::isomorphic(parse_smiles(write_smiles(ethanol)), ethanol));
  EXPECT_EQ(write_smiles(ethanol), write_smiles(parse_smiles("CCO")));
  MolGraph split;
  split.add_atom({});
  split.add_atom({});
  EXPECT_THROW(write_smiles(split), ConfigError);
}

TEST(WriteSmiles, RoundTripCorpus) {
  const auto corpus = smiles_file("roundtrip.smi");
  ASSERT_EQ(corpus.size(), 50u);
  for (const auto& text : corpus) {
    const auto g = parse_smiles(text);
    const auto written = write_smiles(g);
    const auto back = parse_smiles(written);
    EXPECT_TRUE(test::isomorphic(g, back)) << text << " -> " << written;
    EXPECT_EQ(write_smiles(back), written) << text;
  }
}

TEST(WriteSmiles, CanonicalUnderReindexing) {
  CounterRng rng(5);
  for (const auto& text : smiles_file("roundtrip.smi")) {
    const auto g = parse_smiles(text);
    const auto p = test::permuted(g, shuffled_indices(g.atom_count(), rng));
    ASSERT_TRUE(test::isomorphic(g, p));
    EXPECT_EQ(write_smiles(p), write_smiles(g)) << text;
  }
}

TEST(Isomorphism, MatcherDistinguishes) {
  EXPECT_FALSE(test::isomorphic(parse_smiles("CCCC"), parse_smiles("CC(C)C")));
  EXPECT_FALSE(test::isomorphic(parse_smiles("C=CC"), parse_smiles("CCC")));
  EXPECT_FALSE(test::isomorphic(parse_smiles("C1CCCCC1"), parse_smiles("CC1CCCC1")));
  EXPECT_TRUE(test::isomorphic(parse_smiles("C1CCCCC1"), parse_smiles("C1CCCCC1")));
}

TEST(ValidateValence, Examples) {
  EXPECT_TRUE(validate_valence(parse_smiles("C1CCCCC1")).empty());
  MolGraph g;
  const int n = g.add_atom({Element::N, 0, 0, true});
  for (int i = 0; i < 4; ++i) g.add_bond(n, g.add_atom({}), 1);
  g.fill_hydrogens();
  const auto violations = validate_valence(g);
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].atom, n);
  EXPECT_EQ(violations[0].total, 4);
  EXPECT_EQ(violations[0].allowed, 3);
  g.atom(n).charge = 1;
  EXPECT_TRUE(validate_valence(g).empty());
}

TEST(MolGraph, BondRules) {
  MolGraph g;
  g.add_atom({});
  g.add_atom({});
  g.add_bond(1, 0, 2);
  EXPECT_EQ(g.bond_order(0, 1), 2);
  EXPECT_THROW(g.add_bond(0, 1, 1), ConfigError);
  EXPECT_THROW(g.add_bond(0, 0, 1), ConfigError);
  g.add_atom({});
  EXPECT_THROW(g.add_bond(1, 2, 4), ConfigError);
  EXPECT_FALSE(g.is_connected());
  EXPECT_EQ(g.components().size(), 2u);
}

TEST(Rings, MembershipAndLargest) {
  const auto spiro = parse_smiles("C1CCC2(C1)CCCCC2");
  const auto info = find_rings(spiro);
  EXPECT_EQ(info.rings.size(), 2u);
  EXPECT_EQ(info.largest_ring(), 6u);
  EXPECT_EQ(info.membership[3], 2);
  const auto cubane = parse_smiles("C12C3C4C1C5C2C3C45");
  EXPECT_EQ(find_rings(cubane).rings.size(), 5u);
}

TEST(Fingerprint, CyclohexaneGolden) {
  // Six equivalent atoms give one identifier per radius: radii 0, 1, 2.
  const auto fp = morgan_fingerprint(parse_smiles("C1CCCCC1"));
  EXPECT_EQ(fp.popcount(), 3u);
  EXPECT_EQ(fp.size(), 2048u);
}

TEST(Fingerprint, StructureSensitive) {
  EXPECT_NE(morgan_fingerprint(parse_smiles("C")), morgan_fingerprint(parse_smiles("CC")));
  EXPECT_EQ(morgan_fingerprint(parse_smiles("OCC")), morgan_fingerprint(parse_smiles("CCO")));
  CounterRng rng(6);
  for (const auto& text : smiles_file("roundtrip.smi")) {
    const auto g = parse_smiles(text);
    const auto p = test::permuted(g, shuffled_indices(g.atom_count(), rng));
    EXPECT_EQ(morgan_fingerprint(g), morgan_fingerprint(p)) << text;
  }
}

TEST(Tanimoto, Examples) {
  Fingerprint a(4), b(4);
  a.set(0);
  a.set(1);
  b.set(0);
  b.set(2);
  EXPECT_DOUBLE_EQ(tanimoto(a, b), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(tanimoto(a, a), 1.0);
  Fingerprint c(4);
  c.set(3);
  EXPECT_EQ(tanimoto(a, c), 0.0);
  EXPECT_EQ(tanimoto(Fingerprint(4), Fingerprint(4)), 1.0);
  EXPECT_THROW(tanimoto(Fingerprint(4), Fingerprint(8)), ConfigError);
}

TEST(Tanimoto, Properties) {
  CounterRng rng(7);
  for (int i = 0; i < 2000; ++i) {
    Fingerprint a(256), b(256);
    for (int k = 0; k < 40; ++k) {
      a.set(rng.uniform_index(256));
      b.set(rng.uniform_index(256));
    }
    const double t = tanimoto(a, b);
    EXPECT_EQ(t, tanimoto(b, a));
    EXPECT_GE(t, 0.0);
    EXPECT_LE(t, 1.0);
    EXPECT_EQ(tanimoto(a, a), 1.0);
  }
}

// Reads the shipped table directly: element, aromatic flag, hetero bucket,
// value.
std::map<std::string, std::array<double, 3>> table_rows() {
  std::ifstream in(test::data_path("plogp_contributions.tsv"));
  std::map<std::string, std::array<double, 3>> rows;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string element;
    int aromatic = 0, hetero = 0;
    double value = 0;
    if (ss >> element >> aromatic >> hetero >> value) {
      rows[element + (aromatic ? "/aromatic" : "/aliphatic")][static_cast<std::size_t>(hetero)] = value;
    }
  }
  return rows;
}

TEST(SurrogatePlogp, HandSums) {
  const auto rows = table_rows();
  ASSERT_TRUE(rows.count("C/aliphatic"));
  const double c0 = rows.at("C/aliphatic")[0];
  EXPECT_NEAR(surrogate_plogp(parse_smiles("CCCCCC")), 6 * c0, 1e-12);
  // Ethanol: CH3 (no hetero neighbor), CH2 (one), O (none).
  const double ethanol = c0 + rows.at("C/aliphatic")[1] + rows.at("O/aliphatic")[0];
  EXPECT_NEAR(surrogate_plogp(parse_smiles("CCO")), ethanol, 1e-12);
  // Pyridine: two C next to N, three C not, aromatic N; one ring.
  const double pyridine =
      2 * rows.at("C/aromatic")[1] + 3 * rows.at("C/aromatic")[0] + rows.at("N/aromatic")[0] - 0.1;
  EXPECT_NEAR(surrogate_plogp(parse_smiles("c1ccncc1")), pyridine, 1e-12);
  // Quaternary carbon: sa penalty 0.05.
  EXPECT_NEAR(surrogate_plogp(parse_smiles("CC(C)(C)C")), 5 * c0 - 0.05, 1e-12);
}

TEST(SurrogatePlogp, Properties) {
  EXPECT_GT(surrogate_plogp(parse_smiles("CCCCCCC")), surrogate_plogp(parse_smiles("CCCCCC")));
  // Eight carbons either way; only the ring penalty differs.
  const auto octane_ring = surrogate_plogp_breakdown(parse_smiles("C1CCCCCCC1"));
  const auto ethylcyclohexane = surrogate_plogp_breakdown(parse_smiles("CCC1CCCCC1"));
  EXPECT_EQ(octane_ring.ring_penalty, 2.0);
  EXPECT_NEAR(ethylcyclohexane.total - octane_ring.total, 2.0, 1e-12);
  const auto charged = surrogate_plogp_breakdown(parse_smiles("C[N+](C)(C)C"));
  const auto& table = ContributionTable::builtin();
  EXPECT_NEAR(charged.atoms, 4 * table.atom(Element::C, false, 1) + table.atom(Element::N, false, 0) -
                                 table.charge_penalty(),
              1e-12);
  CounterRng rng(8);
  for (const auto& text : smiles_file("roundtrip.smi")) {
    const auto g = parse_smiles(text);
    const auto p = test::permuted(g, shuffled_indices(g.atom_count(), rng));
    EXPECT_NEAR(surrogate_plogp(p), surrogate_plogp(g), 1e-12) << text;
  }
}

TEST(ContributionTable, LoadMatchesBuiltin) {
  const auto loaded = ContributionTable::load(test::data_path("plogp_contributions.tsv"));
  const auto& builtin = ContributionTable::builtin();
  for (Element e : kAllElements) {
    for (int h = 0; h < 4; ++h) {
      EXPECT_EQ(loaded.atom(e, false, h), builtin.atom(e, false, h));
      EXPECT_EQ(loaded.atom(e, true, h), builtin.atom(e, true, h));
    }
  }
  std::istringstream missing("C\t0\t0\t0.5\nC\t0\t1\t0.1\nC\t0\t2\t-0.2\n");
  EXPECT_THROW(ContributionTable::read(missing), FormatError);
}

TEST(GraphObjective, Examples) {
  const auto x0 = parse_smiles("CCOC(=O)c1ccccc1");
  const GraphObjectiveConfig config;
  EXPECT_NEAR(graph_objective(x0, x0, config), surrogate_plogp(x0) + 5.0, 1e-12);

  const auto candidate = parse_smiles("CCOC(=O)c1ccccc1C");
  GraphObjective objective(x0, config);
  const double sim = objective.similarity(candidate);
  ASSERT_GT(sim, 0.0);
  ASSERT_LT(sim, 1.0);
  GraphObjectiveConfig gate = config;
  gate.sim_threshold = sim;
  EXPECT_EQ(graph_objective(candidate, x0, gate), -kInf);
  gate.sim_threshold = std::nextafter(sim, 0.0);
  EXPECT_NEAR(graph_objective(candidate, x0, gate), surrogate_plogp(candidate) + 5 * sim, 1e-12);

  MolGraph bad = x0;
  bad.atom(0).element = Element::F;
  EXPECT_FALSE(validate_valence(bad).empty());
  EXPECT_EQ(graph_objective(bad, x0, config), -kInf);
  EXPECT_EQ(graph_objective(MolGraph{}, x0, config), -kInf);
}

TEST(MultiObjective, Examples) {
  const auto x0 = parse_smiles("CCO");
  GraphObjectiveConfig config;
  const std::vector<Scorer> pair{[](const MolGraph&) { return 0.25; }, [](const MolGraph&) { return 1.0; }};
  EXPECT_DOUBLE_EQ(multi_objective(x0, x0, pair, config), 0.5);
  const std::vector<Scorer> one{[](const MolGraph&) { return 0.7; }};
  EXPECT_DOUBLE_EQ(multi_objective(x0, x0, one, config), 0.7);
  const std::vector<Scorer> zero{[](const MolGraph&) { return 0.0; }, [](const MolGraph&) { return 0.9; }};
  EXPECT_EQ(multi_objective(x0, x0, zero, config), 0.0);
  EXPECT_EQ(multi_objective(parse_smiles("CCCCCCCCN"), x0, one, config), -kInf);
  const std::vector<Scorer> out_of_range{[](const MolGraph&) { return 1.5; }};
  EXPECT_THROW(multi_objective(x0, x0, out_of_range, config), ConfigError);
  EXPECT_THROW(multi_objective(x0, x0, std::span<const Scorer>{}, config), ConfigError);
  const auto scorer = normalized_plogp_scorer(10.0);
  EXPECT_NEAR(scorer(parse_smiles("CCCCCC")), 0.3, 1e-12);
}

TEST(EnumerateEdits, DeletionExamples) {
  const auto propane = parse_smiles("CCC");
  // Removing the middle atom leaves two methanes; one is kept.
  const auto middle = enumerate_edits(propane, 1, GraphEditOp::kDelete, kAllElements);
  ASSERT_EQ(middle.size(), 1u);
  EXPECT_EQ(write_smiles(middle[0]), "C");
  const auto terminal = enumerate_edits(propane, 0, GraphEditOp::kDelete, kAllElements);
  ASSERT_EQ(terminal.size(), 1u);
  EXPECT_TRUE(test::isomorphic(terminal[0], parse_smiles("CC")));

  const auto ring = enumerate_edits(parse_smiles("C1CCCCC1"), 2, GraphEditOp::kDelete, kAllElements);
  ASSERT_EQ(ring.size(), 2u);
  EXPECT_TRUE(test::isomorphic(ring[0], parse_smiles("CCCCC")));
  EXPECT_TRUE(test::isomorphic(ring[1], parse_smiles("C1CCCC1")));

  EXPECT_TRUE(enumerate_edits(parse_smiles("C"), 0, GraphEditOp::kDelete, kAllElements).empty());
  // Fused atom of decalin: ring-opened candidate only.
  const auto decalin = parse_smiles("C1CCC2CCCCC2C1");
  EXPECT_EQ(enumerate_edits(decalin, 3, GraphEditOp::kDelete, kAllElements).size(), 1u);
  EXPECT_THROW(enumerate_edits(propane, 3, GraphEditOp::kDelete, kAllElements), ConfigError);
}

TEST(EnumerateEdits, ReplaceAndInsert) {
  const auto ethanol = parse_smiles("CCO");
  const std::array<Element, 1> nitrogen{Element::N};
  const auto replaced = enumerate_edits(ethanol, 2, GraphEditOp::kReplace, nitrogen);
  ASSERT_EQ(replaced.size(), 1u);
  EXPECT_TRUE(test::isomorphic(replaced[0], parse_smiles("CCN")));
  const auto inserted = enumerate_edits(ethanol, 0, GraphEditOp::kInsert, kAllElements);
  EXPECT_EQ(inserted.size(), kElementCount);
  for (const auto& g : inserted) {
    EXPECT_EQ(g.atom_count(), 4u);
    EXPECT_EQ(g.bond_count(), 3u);
  }
}

TEST(EnumerateEdits, CandidatesAreOneAtomEdits) {
  for (const auto& text : smiles_file("roundtrip.smi")) {
    const auto g = parse_smiles(text);
    const auto rings = find_rings(g);
    for (int atom = 0; atom < static_cast<int>(g.atom_count()); ++atom) {
      for (const auto& c : enumerate_edits(g, atom, GraphEditOp::kReplace, kAllElements)) {
        EXPECT_EQ(c.atom_count(), g.atom_count());
        EXPECT_EQ(c.bond_count(), g.bond_count());
        EXPECT_TRUE(c.is_connected());
      }
      for (const auto& c : enumerate_edits(g, atom, GraphEditOp::kInsert, kAllElements)) {
        EXPECT_EQ(c.atom_count(), g.atom_count() + 1);
        EXPECT_TRUE(c.is_connected());
      }
      const auto deleted = enumerate_edits(g, atom, GraphEditOp::kDelete, kAllElements);
      for (const auto& c : deleted) {
        EXPECT_LE(c.atom_count(), g.atom_count() - 1);
        EXPECT_TRUE(c.is_connected());
      }
      if (g.atom_count() > 1 && g.degree(atom) <= 1) {
        ASSERT_EQ(deleted.size(), 1u);
        EXPECT_EQ(deleted[0].atom_count(), g.atom_count() - 1);
      }
      if (rings.membership[atom] == 0 && g.atom_count() > 1) {
        EXPECT_EQ(deleted.size(), 1u) << text;
      }
    }
  }
}

TEST(ContextModel, Examples) {
  const std::vector<MolGraph> ethanol{parse_smiles("CCO")};
  const auto model = NodeContextModel::train(ethanol);
  NodeContext terminal{{Element::C}, 1};
  EXPECT_EQ(terminal.key(), "C/1");
  EXPECT_EQ(NodeContext::from_key("C.C.O/3"), (NodeContext{{Element::C, Element::C, Element::O}, 3}));
  double best = 0;
  for (Element e : kAllElements) best = std::max(best, model.probability(e, terminal));
  EXPECT_EQ(model.probability(Element::O, terminal), best);
  EXPECT_NEAR(model.probability(Element::O, terminal), 2.0 / 12.0, 1e-15);
  EXPECT_THROW(NodeContextModel::train({}), InputError);
}

TEST(ContextModel, NormalizedAndAdditive) {
  std::vector<MolGraph> first, second, both;
  const auto corpus = smiles_file("context_corpus.smi");
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto g = parse_smiles(corpus[i]);
    (i % 2 == 0 ? first : second).push_back(g);
    both.push_back(g);
  }
  auto merged = NodeContextModel::train(first);
  merged.merge(NodeContextModel::train(second));
  const auto whole = NodeContextModel::train(both);
  EXPECT_EQ(merged, whole);
  for (const auto& [key, counts] : whole.counts()) {
    const auto ctx = NodeContext::from_key(key);
    double sum = 0;
    for (Element e : kAllElements) sum += whole.probability(e, ctx);
    EXPECT_NEAR(sum, 1.0, 1e-12) << key;
  }
}

TEST(ContextModel, RankingRules) {
  std::vector<MolGraph> hydrocarbons;
  for (const char* s : {"C", "CC", "CCC", "CC(C)C", "C1CCCCC1", "C=CC", "C#CC", "CC(C)(C)C", "c1ccccc1", "CCCCCCCC"}) {
    hydrocarbons.push_back(parse_smiles(s));
  }
  const auto model = NodeContextModel::train(hydrocarbons);
  for (const auto& g : hydrocarbons) {
    for (int atom = 0; atom < static_cast<int>(g.atom_count()); ++atom) {
      EXPECT_EQ(rank_candidates(g, atom, GraphEditOp::kReplace, model, 3)[0], Element::C);
      EXPECT_EQ(rank_candidates(g, atom, GraphEditOp::kInsert, model, 3)[0], Element::C);
    }
  }
  const NodeContext unseen{{Element::I, Element::I}, 2};
  const auto ranked = model.rank(unseen, 100);
  EXPECT_EQ(ranked, std::vector<Element>(kAllElements.begin(), kAllElements.end()));
  EXPECT_EQ(model.probability(Element::C, unseen), 0.1);
  EXPECT_TRUE(rank_candidates(hydrocarbons[1], 0, GraphEditOp::kDelete, model, 3).empty());
}

TEST(SoftmaxWeights, Examples) {
  const std::vector<double> two{0.0, std::log(3.0)};
  const auto w = softmax_weights(two);
  EXPECT_NEAR(w[0], 0.25, 1e-15);
  EXPECT_NEAR(w[1], 0.75, 1e-15);
  const std::vector<double> equal{2.0, 2.0};
  EXPECT_EQ(softmax_weights(equal), (std::vector<double>{0.5, 0.5}));
  const std::vector<double> gated{-kInf, 1.0};
  EXPECT_EQ(softmax_weights(gated), (std::vector<double>{0.0, 1.0}));
  const std::vector<double> none{-kInf, -kInf};
  EXPECT_TRUE(softmax_weights(none).empty());
  const std::vector<double> large{1000.0, 1001.0, -kInf, 999.0};
  const auto lw = softmax_weights(large);
  EXPECT_NEAR(std::accumulate(lw.begin(), lw.end(), 0.0), 1.0, 1e-12);
}

const NodeContextModel& corpus_model() {
  static const NodeContextModel model = [] {
    std::vector<MolGraph> graphs;
    for (const auto& s : smiles_file("context_corpus.smi")) graphs.push_back(parse_smiles(s));
    return NodeContextModel::train(graphs);
  }();
  return model;
}

TEST(ProposeGraphEdit, GatedCandidatesOnly) {
  const auto x0 = parse_smiles("CC(=O)NCCO");
  GraphProposalConfig config;
  CounterRng rng(9);
  const auto reject_all = [](const MolGraph&) { return -kInf; };
  for (int i = 0; i < 50; ++i) EXPECT_EQ(propose_graph_edit(x0, rng, corpus_model(), config, reject_all), x0);
  const auto only_bigger = [&](const MolGraph& g) { return g.atom_count() > x0.atom_count() ? 0.0 : -kInf; };
  config.op_weights = {0, 1, 0};
  for (int i = 0; i < 50; ++i) {
    EXPECT_EQ(propose_graph_edit(x0, rng, corpus_model(), config, only_bigger).atom_count(), x0.atom_count() + 1);
  }
}

TEST(GraphProblem, AcceptedStatesPassTheGate) {
  GraphObjectiveConfig objective;
  objective.sim_threshold = 0.4;
  for (const auto& text : smiles_file("low_plogp.smi")) {
    GraphProblem problem(corpus_model(), parse_smiles(text), objective, {});
    AnnealerConfig config;
    config.t_init = 0.05;
    config.cooling_coeff = 1e-4;
    config.max_steps = 300;
    config.seed = 1;
    const auto result = run_annealing(problem, config, [&](const StepRecord& r, const MolGraph& g, double) {
      if (!r.accepted) return;
      EXPECT_TRUE(validate_valence(g).empty());
      EXPECT_GT(problem.scorer().similarity(g), 0.4);
    });
    EXPECT_GE(result.best_score, problem.objective(problem.initial_state()));
  }
}

TEST(GraphProblem, Reproducible) {
  const auto x0 = parse_smiles("OCC(O)CN");
  AnnealerConfig config;
  config.max_steps = 200;
  config.seed = 4;
  GraphProblem a(corpus_model(), x0, {}, {});
  GraphProblem b(corpus_model(), x0, {}, {});
  EXPECT_EQ(run_annealing(a, config).trajectory, run_annealing(b, config).trajectory);
}

TEST(Crossover, ProducesConnectedValidGraphs) {
  const auto corpus = smiles_file("context_corpus.smi");
  CounterRng rng(10);
  for (int i = 0; i < 200; ++i) {
    const auto a = parse_smiles(corpus[rng.uniform_index(corpus.size())]);
    const auto b = parse_smiles(corpus[rng.uniform_index(corpus.size())]);
    const auto child = crossover_graphs(a, b, rng);
    EXPECT_TRUE(child.is_connected());
    EXPECT_GE(child.atom_count(), 1u);
  }
}

}  // namespace
}  // namespace sags::mol
