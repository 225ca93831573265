#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "sags/core/objective_report.h"
#include "sags/core/rng.h"
#include "sags/seq/embeddings.h"
#include "sags/seq/keywords.h"
#include "sags/seq/language_model.h"
#include "sags/seq/objective.h"
#include "sags/seq/proposal.h"

namespace sags::seq {

// Read-only models shared by every paraphrasing run.
struct SequenceModels {
  const LanguageModel& forward;
  const LanguageModel& backward;
  const EmbeddingStore& store;
  const StopwordSet& stopwords;
};

// Paraphrasing search problem for one input sentence. Owns a per-run cache
// of objective reports keyed by sentence content; create one per run.
class SequenceProblem {
 public:
  using State = Sentence;

  SequenceProblem(const SequenceModels& models, Sentence original, SequenceObjectiveConfig objective,
                  ProposalConfig proposal);

  const Sentence& initial_state() const noexcept { return original_; }
  double objective(const Sentence& candidate);
  const ObjectiveReport& report(const Sentence& candidate);
  Sentence propose(const Sentence& current, CounterRng& rng);

  const std::vector<std::string>& keywords() const noexcept { return keywords_; }
  std::size_t cache_size() const noexcept { return cache_.size(); }

 private:
  SequenceModels models_;
  Sentence original_;
  SequenceObjectiveConfig objective_config_;
  ProposalConfig proposal_config_;
  std::vector<std::string> keywords_;
  std::unordered_map<Sentence, ObjectiveReport> cache_;
};

// Sentence crossover for the genetic mode: split both parents at one
// uniformly drawn position.
Sentence crossover_sentences(const Sentence& a, const Sentence& b, CounterRng& rng);

}  // namespace sags::seq
