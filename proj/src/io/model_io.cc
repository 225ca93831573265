#include "sags/io/model_io.h"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sags/io/records.h"

namespace sags::io {
namespace {

constexpr std::string_view kLmMagic = "SAGS-LM";
constexpr std::string_view kCtxMagic = "SAGS-CTX";
constexpr std::string_view kIdfMagic = "SAGS-IDF";

std::string version_line(std::string_view magic) {
  return std::string(magic) + " " + std::to_string(kFormatMajor) + "." + std::to_string(kFormatMinor) + "\n";
}

void write_with_checksum(std::ostream& out, const std::string& body) {
  char hex[32];
  std::snprintf(hex, sizeof(hex), "%016" PRIx64, fnv1a64(body));
  out << body << "checksum " << hex << "\n";
  if (!out) throw IoError("write failed");
}

// Verifies the trailer and the header; returns the payload after the header.
std::istringstream open_payload(std::istream& in, std::string_view magic) {
  const std::string all{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (all.empty() || all.back() != '\n') throw ChecksumError("model file is truncated");
  const auto trailer = all.rfind('\n', all.size() - 2);
  const std::size_t start = trailer == std::string::npos ? 0 : trailer + 1;
  const std::string last = all.substr(start, all.size() - start - 1);
  if (last.rfind("checksum ", 0) != 0) throw ChecksumError("model file has no checksum (truncated?)");
  const std::string body = all.substr(0, start);
  char hex[32];
  std::snprintf(hex, sizeof(hex), "%016" PRIx64, fnv1a64(body));
  if (last.substr(9) != hex) throw ChecksumError("model file checksum mismatch");

  std::istringstream payload(body);
  std::string found_magic;
  std::string version;
  payload >> found_magic >> version;
  if (found_magic != magic) throw FormatError("not a " + std::string(magic) + " file");
  int major = 0;
  int minor = 0;
  if (std::sscanf(version.c_str(), "%d.%d", &major, &minor) != 2) throw FormatError("bad version " + version);
  if (major != kFormatMajor) {
    throw VersionError("unsupported model format version " + version + " (reader is " +
                       std::to_string(kFormatMajor) + "." + std::to_string(kFormatMinor) + ")");
  }
  return payload;
}

template <class T>
T expect(std::istream& in, const char* what) {
  T value{};
  if (!(in >> value)) throw FormatError(std::string("model file: expected ") + what);
  return value;
}

void expect_word(std::istream& in, std::string_view word) {
  if (expect<std::string>(in, "keyword") != word) throw FormatError("model file: expected '" + std::string(word) + "'");
}

std::ofstream create(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void write_language_model(std::ostream& out, const seq::LanguageModel& model) {
  std::ostringstream body;
  const auto& opt = model.options();
  body << version_line(kLmMagic);
  body << "order " << opt.order << "\ndirection " << seq::to_string(opt.direction) << "\nadd_k "
       << format_double(opt.add_k) << "\nmin_count " << opt.min_count << "\n";
  const auto words = model.words();
  body << "words " << words.size() << "\n";
  for (const auto& w : words) body << w << "\n";

  std::vector<const std::pair<const seq::LanguageModel::Context, seq::LanguageModel::ContextCounts>*> rows;
  for (const auto& row : model.counts()) rows.push_back(&row);
  std::sort(rows.begin(), rows.end(), [](auto* a, auto* b) { return a->first < b->first; });
  body << "contexts " << rows.size() << "\n";
  for (const auto* row : rows) {
    for (auto id : row->first) body << id << " ";
    std::vector<std::pair<seq::TokenId, std::uint64_t>> next(row->second.next.begin(), row->second.next.end());
    std::sort(next.begin(), next.end());
    body << row->second.total << " " << next.size();
    for (const auto& [id, count] : next) body << " " << id << ":" << count;
    body << "\n";
  }
  write_with_checksum(out, body.str());
}

seq::LanguageModel read_language_model(std::istream& in) {
  auto payload = open_payload(in, kLmMagic);
  seq::LmOptions opt;
  expect_word(payload, "order");
  opt.order = expect<int>(payload, "order");
  expect_word(payload, "direction");
  opt.direction = seq::parse_direction(expect<std::string>(payload, "direction"));
  expect_word(payload, "add_k");
  opt.add_k = parse_double(expect<std::string>(payload, "add_k"));
  expect_word(payload, "min_count");
  opt.min_count = expect<int>(payload, "min_count");

  expect_word(payload, "words");
  const auto n_words = expect<std::size_t>(payload, "word count");
  std::vector<std::string> words;
  words.reserve(n_words);
  for (std::size_t i = 0; i < n_words; ++i) words.push_back(expect<std::string>(payload, "word"));

  expect_word(payload, "contexts");
  const auto n_ctx = expect<std::size_t>(payload, "context count");
  seq::LanguageModel::CountTable counts;
  for (std::size_t i = 0; i < n_ctx; ++i) {
    seq::LanguageModel::Context ctx;
    for (auto& id : ctx) id = expect<seq::TokenId>(payload, "context id");
    seq::LanguageModel::ContextCounts cell;
    cell.total = expect<std::uint64_t>(payload, "context total");
    const auto n_next = expect<std::size_t>(payload, "successor count");
    for (std::size_t k = 0; k < n_next; ++k) {
      const auto item = expect<std::string>(payload, "successor");
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw FormatError("model file: malformed successor " + item);
      try {
        cell.next[static_cast<seq::TokenId>(std::stol(item.substr(0, colon)))] = std::stoull(item.substr(colon + 1));
      } catch (const std::logic_error&) {
        throw FormatError("model file: malformed successor " + item);
      }
    }
    counts.emplace(ctx, std::move(cell));
  }
  std::string extra;
  if (payload >> extra) throw FormatError("model file: trailing data");
  return seq::LanguageModel::from_parts(opt, std::move(words), std::move(counts));
}

void save_language_model(const std::filesystem::path& path, const seq::LanguageModel& model) {
  auto out = create(path);
  write_language_model(out, model);
}

seq::LanguageModel load_language_model(const std::filesystem::path& path) {
  auto in = open(path);
  return read_language_model(in);
}

void write_context_model(std::ostream& out, const mol::NodeContextModel& model) {
  std::ostringstream body;
  body << version_line(kCtxMagic);
  body << "elements";
  for (auto e : mol::kAllElements) body << " " << mol::symbol(e);
  body << "\ncontexts " << model.counts().size() << "\n";
  for (const auto& [key, counts] : model.counts()) {
    body << key;
    for (auto c : counts) body << " " << c;
    body << "\n";
  }
  write_with_checksum(out, body.str());
}

mol::NodeContextModel read_context_model(std::istream& in) {
  auto payload = open_payload(in, kCtxMagic);
  expect_word(payload, "elements");
  for (auto e : mol::kAllElements) {
    if (expect<std::string>(payload, "element") != mol::symbol(e)) {
      throw FormatError("context model element vocabulary differs");
    }
  }
  expect_word(payload, "contexts");
  const auto n = expect<std::size_t>(payload, "context count");
  std::map<std::string, mol::NodeContextModel::Counts> counts;
  for (std::size_t i = 0; i < n; ++i) {
    auto key = expect<std::string>(payload, "context key");
    mol::NodeContextModel::Counts row{};
    for (auto& c : row) c = expect<std::uint64_t>(payload, "count");
    counts.emplace(std::move(key), row);
  }
  std::string extra;
  if (payload >> extra) throw FormatError("model file: trailing data");
  return mol::NodeContextModel::from_counts(std::move(counts));
}

void save_context_model(const std::filesystem::path& path, const mol::NodeContextModel& model) {
  auto out = create(path);
  write_context_model(out, model);
}

mol::NodeContextModel load_context_model(const std::filesystem::path& path) {
  auto in = open(path);
  return read_context_model(in);
}

void write_idf(std::ostream& out, const std::unordered_map<std::string, double>& idf) {
  std::vector<std::pair<std::string, double>> rows(idf.begin(), idf.end());
  std::sort(rows.begin(), rows.end());
  std::ostringstream body;
  body << version_line(kIdfMagic) << "words " << rows.size() << "\n";
  for (const auto& [word, value] : rows) body << word << " " << format_double(value) << "\n";
  write_with_checksum(out, body.str());
}

std::unordered_map<std::string, double> read_idf(std::istream& in) {
  auto payload = open_payload(in, kIdfMagic);
  expect_word(payload, "words");
  const auto n = expect<std::size_t>(payload, "word count");
  std::unordered_map<std::string, double> idf;
  for (std::size_t i = 0; i < n; ++i) {
    auto word = expect<std::string>(payload, "word");
    idf[std::move(word)] = parse_double(expect<std::string>(payload, "idf value"));
  }
  std::string extra;
  if (payload >> extra) throw FormatError("idf file: trailing data");
  return idf;
}

void save_idf(const std::filesystem::path& path, const std::unordered_map<std::string, double>& idf) {
  auto out = create(path);
  write_idf(out, idf);
}

std::unordered_map<std::string, double> load_idf(const std::filesystem::path& path) {
  auto in = open(path);
  return read_idf(in);
}

}  // namespace sags::io
