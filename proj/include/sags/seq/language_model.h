#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sags/seq/sentence.h"

namespace sags::seq {

using TokenId = std::int32_t;

enum class Direction { kForward, kBackward };

struct LmOptions {
  int order = 3;
  Direction direction = Direction::kForward;
  double add_k = 0.01;
  // Tokens seen fewer times map to <unk>.
  int min_count = 2;

  void validate() const;
};

// Add-k smoothed n-gram model over a closed vocabulary. The predictive
// distribution for every context covers the words plus <unk> and </s>, and
// sums to one. A backward model is trained on reversed sentences; all public
// methods take tokens in natural reading order.
class LanguageModel {
 public:
  static constexpr TokenId kUnk = 0;
  static constexpr TokenId kEos = 1;
  static constexpr TokenId kBos = 2;
  static constexpr int kMaxOrder = 5;

  using Context = std::array<TokenId, kMaxOrder - 1>;

  struct ContextHash {
    std::size_t operator()(const Context& c) const noexcept;
  };

  struct ContextCounts {
    std::uint64_t total = 0;
    std::unordered_map<TokenId, std::uint64_t> next;
  };

  using CountTable = std::unordered_map<Context, ContextCounts, ContextHash>;

  // Throws InputError on an empty corpus.
  static LanguageModel train(std::span<const Sentence> corpus, const LmOptions& options);

  // Rebuilds a model from persisted parts (see io/model_io.h).
  static LanguageModel from_parts(const LmOptions& options, std::vector<std::string> words, CountTable counts);

  const LmOptions& options() const noexcept { return options_; }
  int order() const noexcept { return options_.order; }
  Direction direction() const noexcept { return options_.direction; }

  TokenId id(std::string_view token) const;
  const std::string& token(TokenId id) const;
  // Ids of proposable words (specials excluded), ascending.
  std::span<const TokenId> word_ids() const noexcept { return word_ids_; }
  // Smoothing denominator: words + <unk> + </s>.
  std::size_t vocabulary_size() const noexcept { return tokens_.size() - 1; }
  bool in_vocabulary(std::string_view token) const { return id(token) != kUnk; }

  // p(next | history); history is in the model's reading direction, most
  // recent token last, and is truncated / <s>-padded to order - 1.
  double prob(TokenId next, std::span<const TokenId> history) const;

  // Sum of log p over the tokens of s (natural order; reversed internally
  // for a backward model), optionally followed by </s>.
  double log_prob(const Sentence& s, bool include_eos) const;

  // Context of the last order-1 ids of history, <s>-padded.
  Context make_context(std::span<const TokenId> history) const;

  const CountTable& counts() const noexcept { return counts_; }
  // Words in id order, starting at the first non-special id.
  std::vector<std::string> words() const;

 private:
  LanguageModel() = default;
  void index_vocabulary(std::vector<std::string> words);

  LmOptions options_;
  std::vector<std::string> tokens_;  // id -> token, specials first
  std::unordered_map<std::string, TokenId> ids_;
  std::vector<TokenId> word_ids_;
  CountTable counts_;
};

std::string_view to_string(Direction direction);
Direction parse_direction(std::string_view name);

}  // namespace sags::seq
