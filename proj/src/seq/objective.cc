#include "sags/seq/objective.h"

#include <algorithm>
#include <cmath>

#include "sags/core/error.h"

namespace sags::seq {
namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

void SequenceObjectiveConfig::validate() const {
  if (!(p_keyword >= 0.0) || !(q_sentence >= 0.0) || !(s_diversity >= 0.0)) {
    throw ConfigError("objective powers must be nonnegative");
  }
  bleu.validate();
}

double sem_keyword_score(const Sentence& candidate, std::span<const std::string> keywords,
                         const EmbeddingStore& store) {
  if (keywords.empty()) return 1.0;
  double worst = 1.0;
  for (const auto& keyword : keywords) {
    const auto e = store.vector(keyword);
    double best = 0.0;
    for (const auto& w : candidate) best = std::max(best, clamp01(cosine(store.vector(w), e)));
    worst = std::min(worst, best);
  }
  return worst;
}

double sem_sentence_score(const Sentence& candidate, const Sentence& original, const EmbeddingStore& store) {
  return clamp01(cosine(store.sentence_vector(candidate), store.sentence_vector(original)));
}

double expression_diversity(const Sentence& candidate, const Sentence& original, const metrics::BleuConfig& bleu) {
  return clamp01(1.0 - metrics::bleu(candidate.words(), original.words(), bleu));
}

double fluency(const Sentence& candidate, const LanguageModel& forward) {
  if (forward.direction() != Direction::kForward) throw ConfigError("fluency needs a forward language model");
  return std::exp(forward.log_prob(candidate, /*include_eos=*/false));
}

double combine(const SequenceFactors& f, const SequenceObjectiveConfig& config) {
  return std::pow(f.keyword, config.p_keyword) * std::pow(f.sentence, config.q_sentence) *
         std::pow(f.diversity, config.s_diversity) * f.fluency;
}

SequenceFactors sequence_factors(const Sentence& candidate, const Sentence& original,
                                 std::span<const std::string> keywords, const LanguageModel& forward,
                                 const EmbeddingStore& store, const metrics::BleuConfig& bleu) {
  SequenceFactors f;
  f.keyword = sem_keyword_score(candidate, keywords, store);
  f.sentence = sem_sentence_score(candidate, original, store);
  f.diversity = expression_diversity(candidate, original, bleu);
  f.fluency = fluency(candidate, forward);
  return f;
}

ObjectiveReport sequence_objective(const Sentence& candidate, const Sentence& original,
                                   std::span<const std::string> keywords, const LanguageModel& forward,
                                   const EmbeddingStore& store, const SequenceObjectiveConfig& config) {
  const SequenceFactors f = sequence_factors(candidate, original, keywords, forward, store, config.bleu);
  ObjectiveReport report;
  report.total = combine(f, config);
  report.terms = {{"sim_key", f.keyword}, {"sim_sen", f.sentence}, {"exp", f.diversity}, {"flu", f.fluency}};
  return report;
}

}  // namespace sags::seq
