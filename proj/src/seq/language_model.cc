#include "sags/seq/language_model.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "sags/core/error.h"
#include "sags/core/rng.h"

namespace sags::seq {
namespace {

const std::array<std::string, 3> kSpecials{"<unk>", "</s>", "<s>"};

}  // namespace

void LmOptions::validate() const {
  if (order < 1 || order > LanguageModel::kMaxOrder) {
    throw ConfigError("LM order must be in [1, " + std::to_string(LanguageModel::kMaxOrder) + "]");
  }
  if (!(add_k > 0.0)) throw ConfigError("add-k constant must be positive");
  if (min_count < 1) throw ConfigError("min_count must be >= 1");
}

std::string_view to_string(Direction direction) {
  return direction == Direction::kForward ? "forward" : "backward";
}

Direction parse_direction(std::string_view name) {
  if (name == "forward") return Direction::kForward;
  if (name == "backward") return Direction::kBackward;
  throw ConfigError("unknown LM direction '" + std::string(name) + "'");
}

std::size_t LanguageModel::ContextHash::operator()(const Context& c) const noexcept {
  std::uint64_t h = 0;
  for (TokenId id : c) h = mix64(h ^ static_cast<std::uint32_t>(id));
  return static_cast<std::size_t>(h);
}

void LanguageModel::index_vocabulary(std::vector<std::string> words) {
  tokens_.assign(kSpecials.begin(), kSpecials.end());
  ids_.clear();
  for (std::size_t i = 0; i < tokens_.size(); ++i) ids_.emplace(tokens_[i], static_cast<TokenId>(i));
  word_ids_.clear();
  for (auto& w : words) {
    if (ids_.count(w) != 0) throw FormatError("duplicate vocabulary entry '" + w + "'");
    const auto id = static_cast<TokenId>(tokens_.size());
    ids_.emplace(w, id);
    tokens_.push_back(std::move(w));
    word_ids_.push_back(id);
  }
}

LanguageModel LanguageModel::train(std::span<const Sentence> corpus, const LmOptions& options) {
  options.validate();
  if (corpus.empty()) throw InputError("cannot train a language model on an empty corpus");

  std::map<std::string, std::uint64_t> frequency;
  for (const auto& s : corpus) {
    for (const auto& w : s) ++frequency[w];
  }
  std::vector<std::string> words;
  for (const auto& [w, count] : frequency) {
    if (count >= static_cast<std::uint64_t>(options.min_count) &&
        std::find(kSpecials.begin(), kSpecials.end(), w) == kSpecials.end()) {
      words.push_back(w);
    }
  }

  LanguageModel lm;
  lm.options_ = options;
  lm.index_vocabulary(std::move(words));

  const int history = options.order - 1;
  std::vector<TokenId> seq;
  for (const auto& s : corpus) {
    seq.assign(static_cast<std::size_t>(history), kBos);
    if (options.direction == Direction::kForward) {
      for (const auto& w : s) seq.push_back(lm.id(w));
    } else {
      for (auto it = s.words().rbegin(); it != s.words().rend(); ++it) seq.push_back(lm.id(*it));
    }
    seq.push_back(kEos);
    for (std::size_t i = static_cast<std::size_t>(history); i < seq.size(); ++i) {
      const Context ctx = lm.make_context(std::span<const TokenId>(seq.data(), i));
      auto& cell = lm.counts_[ctx];
      ++cell.total;
      ++cell.next[seq[i]];
    }
  }
  return lm;
}

LanguageModel LanguageModel::from_parts(const LmOptions& options, std::vector<std::string> words,
                                        CountTable counts) {
  options.validate();
  LanguageModel lm;
  lm.options_ = options;
  lm.index_vocabulary(std::move(words));
  const auto limit = static_cast<TokenId>(lm.tokens_.size());
  for (const auto& [ctx, cell] : counts) {
    std::uint64_t sum = 0;
    for (const auto& [next, count] : cell.next) {
      if (next < 0 || next >= limit || next == kBos) throw FormatError("count table references unknown token id");
      sum += count;
    }
    if (sum != cell.total) throw FormatError("context total does not match its counts");
  }
  lm.counts_ = std::move(counts);
  return lm;
}

TokenId LanguageModel::id(std::string_view token) const {
  const auto it = ids_.find(std::string(token));
  if (it == ids_.end() || it->second == kBos) return kUnk;
  return it->second;
}

const std::string& LanguageModel::token(TokenId id) const { return tokens_.at(static_cast<std::size_t>(id)); }

std::vector<std::string> LanguageModel::words() const {
  return {tokens_.begin() + static_cast<std::ptrdiff_t>(kSpecials.size()), tokens_.end()};
}

LanguageModel::Context LanguageModel::make_context(std::span<const TokenId> history) const {
  Context ctx;
  ctx.fill(-1);
  const auto n = static_cast<std::size_t>(options_.order - 1);
  for (std::size_t i = 0; i < n; ++i) {
    // ctx[n-1] is the most recent token.
    const std::size_t back = n - i;
    ctx[i] = history.size() >= back ? history[history.size() - back] : kBos;
  }
  return ctx;
}

double LanguageModel::prob(TokenId next, std::span<const TokenId> history) const {
  const double v = static_cast<double>(vocabulary_size());
  const double k = options_.add_k;
  const auto it = counts_.find(make_context(history));
  if (it == counts_.end()) return 1.0 / v;
  const auto& cell = it->second;
  const auto hit = cell.next.find(next);
  const double c = hit == cell.next.end() ? 0.0 : static_cast<double>(hit->second);
  return (c + k) / (static_cast<double>(cell.total) + k * v);
}

double LanguageModel::log_prob(const Sentence& s, bool include_eos) const {
  std::vector<TokenId> seq;
  seq.reserve(s.size() + 1);
  if (options_.direction == Direction::kForward) {
    for (const auto& w : s) seq.push_back(id(w));
  } else {
    for (auto it = s.words().rbegin(); it != s.words().rend(); ++it) seq.push_back(id(*it));
  }
  if (include_eos) seq.push_back(kEos);
  double total = 0.0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    total += std::log(prob(seq[i], std::span<const TokenId>(seq.data(), i)));
  }
  return total;
}

}  // namespace sags::seq
