#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sags/core/rng.h"
#include "sags/seq/language_model.h"
#include "sags/seq/sentence.h"

namespace sags::seq {

enum class EditOp { kReplace = 0, kInsert = 1, kDelete = 2 };

std::string_view to_string(EditOp op);

struct ProposalConfig {
  std::size_t top_k = 50;
  // Probabilities of replace, insert, delete.
  std::array<double, 3> op_weights{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  // Adds the original sentence's words to every replace/insert vocabulary.
  bool copy_enabled = true;

  void validate() const;
};

// Candidate words for a replace at `index` or an insert before `index`.
// Every model word w is scored by p_fwd(w | prefix) * p_bwd(w | suffix); for
// an insert the suffix starts at the inserted slot. Returns the top_k words
// (ties broken by id), then, when copy is enabled, the original's words not
// already listed.
std::vector<std::string> propose_vocabulary(const Sentence& sentence, std::size_t index, EditOp op,
                                            const LanguageModel& forward, const LanguageModel& backward,
                                            const Sentence& original, const ProposalConfig& config);

// Normalizes nonnegative objective values into sampling probabilities
// f / sum(f). Returns an empty vector when every value is zero.
std::vector<double> objective_proportional(std::span<const double> scores);

struct ProposalContext {
  const LanguageModel& forward;
  const LanguageModel& backward;
  const Sentence& original;
  const ProposalConfig& config;
};

using SentenceObjective = std::function<double(const Sentence&)>;

// One edit: draws the operation by op_weights and the position uniformly
// over editable slots, then samples a replace/insert candidate with
// probability proportional to its objective. Delete has a single candidate.
// Returns the input when no candidate has positive objective or the edit is
// degenerate (deleting the last word).
Sentence propose_edit(const Sentence& sentence, CounterRng& rng, const ProposalContext& context,
                      const SentenceObjective& objective);

}  // namespace sags::seq
