#include "sags/io/corpus.h"

#include <fstream>

#include "sags/core/error.h"
#include "sags/mol/smiles.h"

namespace sags::io {
namespace {

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

// Reads lines, handing each non-skipped one to parse; parse failures become
// warnings or, in strict mode, an InputError naming the line.
template <class T, class Skip, class Parse>
Loaded<T> read_lines(std::istream& in, LoadMode mode, Skip skip, Parse parse) {
  Loaded<T> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (skip(line)) continue;
    try {
      if (!is_valid_utf8(line)) throw InputError("invalid UTF-8");
      out.items.push_back(parse(line));
    } catch (const Error& e) {
      if (mode == LoadMode::kStrict) throw InputError("line " + std::to_string(number) + ": " + e.what());
      out.warnings.push_back({number, e.what()});
    }
  }
  return out;
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t") == std::string::npos; }

}  // namespace

bool is_valid_utf8(std::string_view text) noexcept {
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    std::size_t extra = 0;
    if (c < 0x80) {
      extra = 0;
    } else if ((c & 0xE0) == 0xC0 && c >= 0xC2) {
      extra = 1;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
    } else if ((c & 0xF8) == 0xF0 && c <= 0xF4) {
      extra = 3;
    } else {
      return false;
    }
    if (i + extra >= text.size()) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      if ((static_cast<unsigned char>(text[i + k]) & 0xC0) != 0x80) return false;
    }
    i += extra + 1;
  }
  return true;
}

Loaded<seq::Sentence> read_sentences(std::istream& in, LoadMode mode) {
  return read_lines<seq::Sentence>(in, mode, blank, [](const std::string& line) { return seq::tokenize(line); });
}

Loaded<ParaphrasePair> read_pairs(std::istream& in, LoadMode mode) {
  return read_lines<ParaphrasePair>(in, mode, blank, [](const std::string& line) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw InputError("expected source<TAB>reference");
    return ParaphrasePair{seq::tokenize(std::string_view(line).substr(0, tab)),
                          seq::tokenize(std::string_view(line).substr(tab + 1))};
  });
}

Loaded<Molecule> read_molecules(std::istream& in, LoadMode mode) {
  return read_lines<Molecule>(
      in, mode, [](const std::string& line) { return blank(line) || line[line.find_first_not_of(" \t")] == '#'; },
      [](const std::string& line) {
        const auto first = line.find_first_not_of(" \t");
        const auto last = line.find_last_not_of(" \t");
        std::string smiles = line.substr(first, last - first + 1);
        mol::MolGraph graph = mol::parse_smiles(smiles);
        if (!graph.is_connected()) throw InputError("disconnected molecule");
        return Molecule{std::move(smiles), std::move(graph)};
      });
}

Loaded<seq::Sentence> load_sentences(const std::filesystem::path& path, LoadMode mode) {
  auto in = open(path);
  return read_sentences(in, mode);
}

Loaded<ParaphrasePair> load_pairs(const std::filesystem::path& path, LoadMode mode) {
  auto in = open(path);
  return read_pairs(in, mode);
}

Loaded<Molecule> load_molecules(const std::filesystem::path& path, LoadMode mode) {
  auto in = open(path);
  return read_molecules(in, mode);
}

std::vector<seq::Sentence> sentences_of(const Loaded<seq::Sentence>& loaded) { return loaded.items; }

std::vector<mol::MolGraph> graphs_of(const Loaded<Molecule>& loaded) {
  std::vector<mol::MolGraph> out;
  out.reserve(loaded.items.size());
  for (const auto& m : loaded.items) out.push_back(m.graph);
  return out;
}

}  // namespace sags::io
