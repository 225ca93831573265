#include "sags/cli/runner.h"

#include <chrono>
#include <fstream>

#include "sags/cli/pool.h"
#include "sags/core/annealer.h"
#include "sags/core/genetic.h"
#include "sags/io/model_io.h"
#include "sags/metrics/bleu.h"
#include "sags/mol/fingerprint.h"
#include "sags/mol/plogp.h"
#include "sags/mol/problem.h"
#include "sags/mol/smiles.h"

namespace sags::cli {
namespace {

void require_path(const std::string& path, const char* what) {
  if (path.empty()) throw ConfigError(std::string("no ") + what + " path configured");
  if (!std::filesystem::exists(path)) throw ConfigError(std::string(what) + " not found: " + path);
}

double elapsed_ms(std::chrono::steady_clock::time_point start, bool omit) {
  if (omit) return 0.0;
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Annealing or genetic search according to config.mode.
template <class Problem, class Crossover>
OptimizationResult<typename Problem::State> optimize(Problem& problem, Crossover crossover,
                                                     const ExperimentConfig& config, std::uint64_t seed) {
  if (config.mode == Mode::kGenetic) {
    GaConfig ga = config.ga;
    ga.seed = seed;
    auto result = run_genetic(problem, crossover, ga);
    return static_cast<OptimizationResult<typename Problem::State>&&>(std::move(result));
  }
  return run_annealing(problem, config.effective_annealer(seed));
}

std::string run_id(const char* prefix, std::size_t input_index, std::size_t run_index) {
  return std::string(prefix) + "-" + std::to_string(input_index) + "-" + std::to_string(run_index);
}

ExperimentConfig snapshot(const ExperimentConfig& config, std::uint64_t seed) {
  ExperimentConfig c = config;
  c.annealer.seed = seed;
  c.ga.seed = seed;
  return c;
}

}  // namespace

SequenceResources SequenceResources::load(const ModelPaths& paths) {
  require_path(paths.forward, "forward language model");
  require_path(paths.backward, "backward language model");
  require_path(paths.embeddings, "embeddings");
  SequenceResources r{io::load_language_model(paths.forward), io::load_language_model(paths.backward),
                      seq::EmbeddingStore::load(paths.embeddings), {}};
  if (r.forward.direction() != seq::Direction::kForward || r.backward.direction() != seq::Direction::kBackward) {
    throw ConfigError("forward/backward language model directions are swapped");
  }
  if (!paths.idf.empty()) {
    require_path(paths.idf, "idf table");
    r.store.set_idf(io::load_idf(paths.idf));
  }
  if (paths.stopwords.empty()) {
    r.stopwords = seq::default_stopwords();
  } else {
    require_path(paths.stopwords, "stopword list");
    r.stopwords = seq::load_stopwords(paths.stopwords);
  }
  return r;
}

RunOutput run_sequence(const SequenceResources& resources, const ExperimentConfig& config,
                       const SequenceInput& input, std::size_t input_index, std::size_t run_index) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t seed = derive_seed(config.annealer.seed, input_index, run_index);
  RunOutput out;
  auto& r = out.record;
  r.run_id = run_id("seq", input_index, run_index);
  r.domain = "sequence";
  r.seed = seed;
  r.input = input.source.text();
  r.config = to_json(snapshot(config, seed), -1);
  r.metrics.emplace_back("self_bleu", 0.0);
  if (input.reference) {
    for (const char* name : {"bleu", "ibleu", "rouge1", "rouge2"}) r.metrics.emplace_back(name, 0.0);
  }
  try {
    seq::SequenceProblem problem(resources.view(), input.source, config.sequence.objective,
                                 config.sequence.proposal);
    auto result = optimize(problem, seq::crossover_sentences, config, seed);
    const auto& best = result.best_state;
    const auto report = problem.report(best);
    r.output = best.text();
    r.f_total = report.total;
    r.f_terms = report.terms;
    r.steps = result.steps_run;
    const auto& bleu_cfg = config.sequence.objective.bleu;
    r.metrics[0].second = metrics::bleu(best.words(), input.source.words(), bleu_cfg);
    if (input.reference) {
      const auto& ref = input.reference->words();
      r.metrics[1].second = metrics::bleu(best.words(), ref, bleu_cfg);
      r.metrics[2].second =
          metrics::ibleu(best.words(), ref, input.source.words(), config.sequence.ibleu_alpha, bleu_cfg);
      r.metrics[3].second = ref.size() >= 1 ? metrics::rouge_n(best.words(), ref, 1) : 0.0;
      r.metrics[4].second = ref.size() >= 2 ? metrics::rouge_n(best.words(), ref, 2) : 0.0;
    }
    out.trajectory = std::move(result.trajectory);
  } catch (const Error& e) {
    r.output.clear();
    r.f_total = -std::numeric_limits<double>::infinity();
    r.error = e.what();
  }
  r.wall_ms = elapsed_ms(start, config.omit_timing);
  return out;
}

RunOutput run_graph(const mol::NodeContextModel& model, const ExperimentConfig& config, const io::Molecule& input,
                    std::size_t input_index, std::size_t run_index) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t seed = derive_seed(config.annealer.seed, input_index, run_index);
  RunOutput out;
  auto& r = out.record;
  r.run_id = run_id("mol", input_index, run_index);
  r.domain = "graph";
  r.seed = seed;
  r.input = input.smiles;
  r.config = to_json(snapshot(config, seed), -1);
  for (const char* name : {"input_plogp", "output_plogp", "improvement", "similarity", "success"}) {
    r.metrics.emplace_back(name, 0.0);
  }
  try {
    mol::GraphProblem problem(model, input.graph, config.graph.objective, config.graph.proposal);
    auto result = optimize(problem, mol::crossover_graphs, config, seed);
    const auto& best = result.best_state;
    const auto report = problem.report(best);
    const double in_plogp = mol::surrogate_plogp(input.graph);
    const double out_plogp = mol::surrogate_plogp(best);
    const std::string out_smiles = mol::write_smiles(best);
    const bool success = problem.scorer().passes_gate(best) && out_smiles != mol::write_smiles(input.graph);
    r.output = out_smiles;
    r.f_total = report.total;
    r.f_terms = report.terms;
    r.steps = result.steps_run;
    r.metrics[0].second = in_plogp;
    r.metrics[1].second = out_plogp;
    r.metrics[2].second = out_plogp - in_plogp;
    r.metrics[3].second = problem.scorer().similarity(best);
    r.metrics[4].second = success ? 1.0 : 0.0;
    out.trajectory = std::move(result.trajectory);
  } catch (const Error& e) {
    r.output.clear();
    r.f_total = -std::numeric_limits<double>::infinity();
    r.error = e.what();
  }
  r.wall_ms = elapsed_ms(start, config.omit_timing);
  return out;
}

std::vector<RunOutput> run_sequence_batch(const SequenceResources& resources, const ExperimentConfig& config,
                                          std::span<const SequenceInput> inputs) {
  const auto runs = static_cast<std::size_t>(config.runs_per_input);
  return parallel_map<RunOutput>(inputs.size() * runs, resolve_workers(config.workers), [&](std::size_t task) {
    return run_sequence(resources, config, inputs[task / runs], task / runs, task % runs);
  });
}

std::vector<RunOutput> run_graph_batch(const mol::NodeContextModel& model, const ExperimentConfig& config,
                                       std::span<const io::Molecule> inputs) {
  const auto runs = static_cast<std::size_t>(config.runs_per_input);
  return parallel_map<RunOutput>(inputs.size() * runs, resolve_workers(config.workers), [&](std::size_t task) {
    return run_graph(model, config, inputs[task / runs], task / runs, task % runs);
  });
}

std::vector<SequenceInput> load_sequence_inputs(const std::string& path, io::LoadMode mode,
                                                std::vector<io::LoadWarning>* warnings) {
  if (!std::filesystem::exists(path)) throw ConfigError("input file not found: " + path);
  std::ifstream probe(path);
  std::string line;
  bool pairs = false;
  while (std::getline(probe, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    pairs = line.find('\t') != std::string::npos;
    break;
  }
  std::vector<SequenceInput> out;
  if (pairs) {
    auto loaded = io::load_pairs(path, mode);
    for (auto& p : loaded.items) out.push_back({std::move(p.source), std::move(p.reference)});
    if (warnings) *warnings = std::move(loaded.warnings);
  } else {
    auto loaded = io::load_sentences(path, mode);
    for (auto& s : loaded.items) out.push_back({std::move(s), std::nullopt});
    if (warnings) *warnings = std::move(loaded.warnings);
  }
  return out;
}

}  // namespace sags::cli
