#pragma once

#include <string>
#include <string_view>

#include "sags/core/annealer.h"
#include "sags/core/genetic.h"
#include "sags/metrics/bleu.h"
#include "sags/mol/objective.h"
#include "sags/mol/proposal.h"
#include "sags/seq/objective.h"
#include "sags/seq/proposal.h"

namespace sags::cli {

enum class Domain { kSequence, kGraph };
enum class Mode { kAnneal, kHillClimb, kFixedTemperature, kGenetic };

std::string_view to_string(Domain d);
std::string_view to_string(Mode m);
Domain parse_domain(std::string_view name);
Mode parse_mode(std::string_view name);

struct ModelPaths {
  std::string forward;     // forward language model
  std::string backward;    // backward language model
  std::string embeddings;  // word vectors
  std::string idf;         // idf table written by train-lm; empty = idf 1
  std::string stopwords;   // empty = bundled list
  std::string context;     // node context model
};

struct SequenceSettings {
  seq::SequenceObjectiveConfig objective;
  seq::ProposalConfig proposal;
  double ibleu_alpha = 0.9;
};

struct GraphSettings {
  mol::GraphObjectiveConfig objective;
  mol::GraphProposalConfig proposal;
};

// Everything one optimize or benchmark invocation needs. Defaults depend on
// the domain: sequence runs use T_init 0.03, C 3e-4, N 200; graph runs use
// T_init 0.01, C 3e-6, N 3000 and M 5.
struct ExperimentConfig {
  Domain domain = Domain::kSequence;
  Mode mode = Mode::kAnneal;
  AnnealerConfig annealer;
  GaConfig ga;
  SequenceSettings sequence;
  GraphSettings graph;
  ModelPaths models;
  std::string input;
  std::string output_dir;
  int runs_per_input = 1;
  int workers = 1;
  // Writes wall_ms as 0 so repeated runs give byte-identical records.
  bool omit_timing = false;

  static ExperimentConfig defaults(Domain domain);
  void validate() const;

  // Annealer settings actually used for a mode (hill climbing forces a
  // constant zero temperature, fixed-temp a constant t_init).
  AnnealerConfig effective_annealer(std::uint64_t seed) const;
};

std::string to_json(const ExperimentConfig& config, int indent = 2);
// Missing keys take the defaults of the (possibly given) domain; unknown
// keys are a ConfigError.
ExperimentConfig config_from_json(std::string_view text);
ExperimentConfig load_config(const std::string& path);

// base + input_index * 1000 + run_index.
std::uint64_t derive_seed(std::uint64_t base, std::size_t input_index, std::size_t run_index);

// SAGS_WORKERS, when set to a positive integer, replaces config.workers.
int resolve_workers(int configured);

}  // namespace sags::cli
