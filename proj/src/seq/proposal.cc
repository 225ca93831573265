#include "sags/seq/proposal.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sags/core/error.h"

namespace sags::seq {

std::string_view to_string(EditOp op) {
  switch (op) {
    case EditOp::kReplace:
      return "replace";
    case EditOp::kInsert:
      return "insert";
    case EditOp::kDelete:
      return "delete";
  }
  return "unknown";
}

void ProposalConfig::validate() const {
  if (top_k < 1) throw ConfigError("top_k must be >= 1");
  double sum = 0.0;
  for (double w : op_weights) {
    if (!(w >= 0.0)) throw ConfigError("operation weights must be nonnegative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw ConfigError("operation weights must sum to 1");
}

std::vector<std::string> propose_vocabulary(const Sentence& sentence, std::size_t index, EditOp op,
                                            const LanguageModel& forward, const LanguageModel& backward,
                                            const Sentence& original, const ProposalConfig& config) {
  if (op == EditOp::kDelete) throw ConfigError("delete has no proposal vocabulary");
  const std::size_t limit = op == EditOp::kInsert ? sentence.size() : sentence.size() - 1;
  if (sentence.empty() || index > limit) throw ConfigError("edit position out of range");

  // Forward history: words before the slot. Backward history: words after
  // the slot in reverse order, most recent (nearest) last.
  std::vector<TokenId> prefix;
  for (std::size_t i = 0; i < index; ++i) prefix.push_back(forward.id(sentence[i]));
  const std::size_t suffix_start = op == EditOp::kReplace ? index + 1 : index;
  std::vector<TokenId> suffix;
  for (std::size_t i = sentence.size(); i > suffix_start; --i) suffix.push_back(backward.id(sentence[i - 1]));

  struct Scored {
    double score;
    TokenId id;
  };
  std::vector<Scored> scored;
  scored.reserve(forward.word_ids().size());
  for (TokenId id : forward.word_ids()) {
    const std::string& word = forward.token(id);
    const double s = forward.prob(id, prefix) * backward.prob(backward.id(word), suffix);
    scored.push_back({s, id});
  }
  const std::size_t k = std::min(config.top_k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(k), scored.end(),
                    [](const Scored& a, const Scored& b) { return a.score > b.score || (a.score == b.score && a.id < b.id); });

  std::vector<std::string> vocabulary;
  vocabulary.reserve(k + original.size());
  for (std::size_t i = 0; i < k; ++i) vocabulary.push_back(forward.token(scored[i].id));
  if (config.copy_enabled) {
    for (const auto& w : original) {
      if (std::find(vocabulary.begin(), vocabulary.end(), w) == vocabulary.end()) vocabulary.push_back(w);
    }
  }
  return vocabulary;
}

std::vector<double> objective_proportional(std::span<const double> scores) {
  double total = 0.0;
  for (double s : scores) {
    if (!(s >= 0.0)) throw ConfigError("sequence objective values must be nonnegative");
    total += s;
  }
  if (!(total > 0.0)) return {};
  std::vector<double> p(scores.begin(), scores.end());
  for (double& x : p) x /= total;
  return p;
}

Sentence propose_edit(const Sentence& sentence, CounterRng& rng, const ProposalContext& context,
                      const SentenceObjective& objective) {
  const auto op = static_cast<EditOp>(rng.categorical(context.config.op_weights));
  const std::size_t editable = sentence.editable_size();

  if (op == EditOp::kDelete || op == EditOp::kReplace) {
    if (editable == 0) return sentence;
    const auto index = static_cast<std::size_t>(rng.uniform_index(editable));
    if (op == EditOp::kDelete) return delete_word(sentence, index);
    const auto vocabulary =
        propose_vocabulary(sentence, index, op, context.forward, context.backward, context.original, context.config);
    std::vector<Sentence> candidates;
    std::vector<double> scores;
    for (const auto& w : vocabulary) {
      candidates.push_back(replace_word(sentence, index, w));
      scores.push_back(objective(candidates.back()));
    }
    const auto p = objective_proportional(scores);
    if (p.empty()) return sentence;
    return candidates[rng.categorical(p)];
  }

  const auto index = static_cast<std::size_t>(rng.uniform_index(editable + 1));
  const auto vocabulary =
      propose_vocabulary(sentence, index, op, context.forward, context.backward, context.original, context.config);
  std::vector<Sentence> candidates;
  std::vector<double> scores;
  for (const auto& w : vocabulary) {
    candidates.push_back(insert_word(sentence, index, w));
    scores.push_back(objective(candidates.back()));
  }
  const auto p = objective_proportional(scores);
  if (p.empty()) return sentence;
  return candidates[rng.categorical(p)];
}

}  // namespace sags::seq
