#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "sags/mol/mol_graph.h"
#include "sags/seq/sentence.h"

namespace sags::io {

// Lenient loading skips malformed lines with a warning; strict loading
// throws InputError naming the first bad line.
enum class LoadMode { kLenient, kStrict };

struct LoadWarning {
  std::size_t line = 0;  // 1-based
  std::string message;
};

template <class T>
struct Loaded {
  std::vector<T> items;
  std::vector<LoadWarning> warnings;
};

struct ParaphrasePair {
  seq::Sentence source;
  seq::Sentence reference;
};

struct Molecule {
  std::string smiles;  // as written in the file
  mol::MolGraph graph;
};

// One sentence per line; blank lines are skipped. Lines that are not valid
// UTF-8 are malformed.
Loaded<seq::Sentence> read_sentences(std::istream& in, LoadMode mode = LoadMode::kLenient);
// "source<TAB>reference" per line.
Loaded<ParaphrasePair> read_pairs(std::istream& in, LoadMode mode = LoadMode::kLenient);
// One SMILES per line; blank lines and lines starting with '#' are skipped.
Loaded<Molecule> read_molecules(std::istream& in, LoadMode mode = LoadMode::kLenient);

// Path variants; throw IoError when the file cannot be opened.
Loaded<seq::Sentence> load_sentences(const std::filesystem::path& path, LoadMode mode = LoadMode::kLenient);
Loaded<ParaphrasePair> load_pairs(const std::filesystem::path& path, LoadMode mode = LoadMode::kLenient);
Loaded<Molecule> load_molecules(const std::filesystem::path& path, LoadMode mode = LoadMode::kLenient);

std::vector<seq::Sentence> sentences_of(const Loaded<seq::Sentence>& loaded);
std::vector<mol::MolGraph> graphs_of(const Loaded<Molecule>& loaded);

bool is_valid_utf8(std::string_view text) noexcept;

}  // namespace sags::io
