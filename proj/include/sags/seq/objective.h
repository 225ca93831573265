#pragma once

#include <span>
#include <string>

#include "sags/core/objective_report.h"
#include "sags/metrics/bleu.h"
#include "sags/seq/embeddings.h"
#include "sags/seq/language_model.h"
#include "sags/seq/sentence.h"

namespace sags::seq {

// Powers on the keyword, sentence-similarity and diversity factors. A power
// of zero removes the factor (ablation).
struct SequenceObjectiveConfig {
  double p_keyword = 8.0;
  double q_sentence = 1.0;
  double s_diversity = 1.0;
  metrics::BleuConfig bleu;

  void validate() const;
};

struct SequenceFactors {
  double keyword = 0.0;
  double sentence = 0.0;
  double diversity = 0.0;
  double fluency = 0.0;
};

// min over keywords of the best cosine (clamped to [0, 1]) against any
// candidate word. 1 when there are no keywords; OOV keywords score 0.
double sem_keyword_score(const Sentence& candidate, std::span<const std::string> keywords,
                         const EmbeddingStore& store);

// Cosine of the idf-weighted sentence vectors, clamped to [0, 1].
double sem_sentence_score(const Sentence& candidate, const Sentence& original, const EmbeddingStore& store);

// 1 - BLEU(candidate, original).
double expression_diversity(const Sentence& candidate, const Sentence& original,
                            const metrics::BleuConfig& bleu = {});

// Product of p(w_k | w_<k) under a forward model (no end-of-sentence term).
double fluency(const Sentence& candidate, const LanguageModel& forward);

double combine(const SequenceFactors& factors, const SequenceObjectiveConfig& config);

SequenceFactors sequence_factors(const Sentence& candidate, const Sentence& original,
                                 std::span<const std::string> keywords, const LanguageModel& forward,
                                 const EmbeddingStore& store, const metrics::BleuConfig& bleu = {});

// keyword^P * sentence^Q * diversity^S * fluency, with the four factors in
// the report's terms.
ObjectiveReport sequence_objective(const Sentence& candidate, const Sentence& original,
                                   std::span<const std::string> keywords, const LanguageModel& forward,
                                   const EmbeddingStore& store, const SequenceObjectiveConfig& config);

}  // namespace sags::seq
