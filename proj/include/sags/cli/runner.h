#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sags/cli/config.h"
#include "sags/io/corpus.h"
#include "sags/io/records.h"
#include "sags/mol/context_model.h"
#include "sags/seq/embeddings.h"
#include "sags/seq/keywords.h"
#include "sags/seq/language_model.h"
#include "sags/seq/problem.h"

namespace sags::cli {

// Models for paraphrasing runs, loaded once and shared read-only.
struct SequenceResources {
  seq::LanguageModel forward;
  seq::LanguageModel backward;
  seq::EmbeddingStore store;
  seq::StopwordSet stopwords;

  static SequenceResources load(const ModelPaths& paths);
  seq::SequenceModels view() const { return {forward, backward, store, stopwords}; }
};

struct SequenceInput {
  seq::Sentence source;
  std::optional<seq::Sentence> reference;
};

struct RunOutput {
  io::RunRecord record;
  std::vector<StepRecord> trajectory;
};

// One run for one input. Record metrics for a sequence run are self_bleu,
// plus bleu, ibleu, rouge1 and rouge2 when a reference is given. Graph runs
// report input_plogp, output_plogp, improvement, similarity and success
// (valid, above the similarity threshold and different from the input).
// Failures are reported in record.error instead of thrown.
RunOutput run_sequence(const SequenceResources& resources, const ExperimentConfig& config,
                       const SequenceInput& input, std::size_t input_index, std::size_t run_index);
RunOutput run_graph(const mol::NodeContextModel& model, const ExperimentConfig& config, const io::Molecule& input,
                    std::size_t input_index, std::size_t run_index);

// All inputs x runs_per_input on the configured worker pool, in input-major
// order.
std::vector<RunOutput> run_sequence_batch(const SequenceResources& resources, const ExperimentConfig& config,
                                          std::span<const SequenceInput> inputs);
std::vector<RunOutput> run_graph_batch(const mol::NodeContextModel& model, const ExperimentConfig& config,
                                       std::span<const io::Molecule> inputs);

// Reads a sentence file; lines with a TAB are source/reference pairs.
std::vector<SequenceInput> load_sequence_inputs(const std::string& path, io::LoadMode mode,
                                                std::vector<io::LoadWarning>* warnings = nullptr);

}  // namespace sags::cli
