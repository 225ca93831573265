#include "sags/seq/problem.h"

#include <algorithm>

namespace sags::seq {

SequenceProblem::SequenceProblem(const SequenceModels& models, Sentence original, SequenceObjectiveConfig objective,
                                 ProposalConfig proposal)
    : models_(models),
      original_(std::move(original)),
      objective_config_(std::move(objective)),
      proposal_config_(proposal) {
  objective_config_.validate();
  proposal_config_.validate();
  keywords_ = extract_keywords(original_, models_.stopwords);
}

const ObjectiveReport& SequenceProblem::report(const Sentence& candidate) {
  auto it = cache_.find(candidate);
  if (it == cache_.end()) {
    it = cache_
             .emplace(candidate, sequence_objective(candidate, original_, keywords_, models_.forward, models_.store,
                                                    objective_config_))
             .first;
  }
  return it->second;
}

double SequenceProblem::objective(const Sentence& candidate) { return report(candidate).total; }

Sentence SequenceProblem::propose(const Sentence& current, CounterRng& rng) {
  const ProposalContext context{models_.forward, models_.backward, original_, proposal_config_};
  return propose_edit(current, rng, context, [this](const Sentence& s) { return objective(s); });
}

Sentence crossover_sentences(const Sentence& a, const Sentence& b, CounterRng& rng) {
  const std::size_t shortest = std::min(a.size(), b.size());
  const std::size_t span = shortest > 1 ? shortest - 1 : 1;
  const std::size_t position = 1 + static_cast<std::size_t>(rng.uniform_index(span));
  return split_crossover(a, b, position);
}

}  // namespace sags::seq
