#include "sags/cli/app.h"

#include <filesystem>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "sags/io/model_io.h"
#include "sags/io/records.h"
#include "sags/mol/smiles.h"
#include "sags/seq/embeddings.h"

namespace sags::cli {
namespace {

namespace fs = std::filesystem;

// Flags shared by optimize and benchmark. Unset flags leave the config
// file's values alone.
struct RunFlags {
  std::string config_path;
  std::optional<std::string> domain;
  std::optional<std::string> mode;
  std::optional<std::string> input;
  std::vector<std::string> texts;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> steps;
  std::optional<double> t_init;
  std::optional<double> cooling;
  std::optional<std::string> schedule;
  std::optional<int> runs;
  std::optional<int> workers;
  std::optional<double> sim_threshold;
  std::optional<double> sim_weight;
  std::optional<std::string> forward;
  std::optional<std::string> backward;
  std::optional<std::string> embeddings;
  std::optional<std::string> idf;
  std::optional<std::string> context;
  bool no_copy = false;
  bool omit_timing = false;
  bool strict = false;
  std::string out_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON experiment config");
    cmd->add_option("--domain", domain, "sequence or graph");
    cmd->add_option("--mode", mode, "sa, hillclimb, fixed-temp or ga");
    cmd->add_option("--input", input, "Input file (sentences, source<TAB>reference pairs, or SMILES)");
    cmd->add_option("--text", texts, "Inline input (sentence or SMILES); repeatable");
    cmd->add_option("--seed", seed, "Base seed");
    cmd->add_option("--steps", steps, "Annealing steps N");
    cmd->add_option("--t-init", t_init, "Initial temperature");
    cmd->add_option("--cooling", cooling, "Cooling coefficient C");
    cmd->add_option("--schedule", schedule, "linear, exponential, logarithmic or constant");
    cmd->add_option("--runs", runs, "Runs per input");
    cmd->add_option("--workers", workers, "Worker threads (SAGS_WORKERS overrides)");
    cmd->add_option("--sim-threshold", sim_threshold, "Graph similarity threshold delta");
    cmd->add_option("--sim-weight", sim_weight, "Graph similarity weight M");
    cmd->add_option("--forward-lm", forward, "Forward language model file");
    cmd->add_option("--backward-lm", backward, "Backward language model file");
    cmd->add_option("--embeddings", embeddings, "Word vector file");
    cmd->add_option("--idf", idf, "idf table written by train-lm");
    cmd->add_option("--context-model", context, "Node context model file");
    cmd->add_flag("--no-copy", no_copy, "Disable the copy mechanism");
    cmd->add_flag("--omit-timing", omit_timing, "Write wall_ms as 0");
    cmd->add_flag("--strict", strict, "Abort on the first malformed input line");
    cmd->add_option("--out", out_path, "Output CSV (default stdout)");
  }

  ExperimentConfig build() const {
    ExperimentConfig c;
    if (!config_path.empty()) {
      c = load_config(config_path);
      if (domain && parse_domain(*domain) != c.domain) {
        throw ConfigError("--domain conflicts with the config file's domain");
      }
    } else {
      c = ExperimentConfig::defaults(domain ? parse_domain(*domain) : Domain::kSequence);
    }
    if (mode) c.mode = parse_mode(*mode);
    if (input) c.input = *input;
    if (seed) c.annealer.seed = *seed;
    if (steps) c.annealer.max_steps = *steps;
    if (t_init) c.annealer.t_init = *t_init;
    if (cooling) c.annealer.cooling_coeff = *cooling;
    if (schedule) c.annealer.schedule = parse_schedule(*schedule);
    if (runs) c.runs_per_input = *runs;
    if (workers) c.workers = *workers;
    if (sim_threshold) c.graph.objective.sim_threshold = *sim_threshold;
    if (sim_weight) c.graph.objective.sim_weight = *sim_weight;
    if (forward) c.models.forward = *forward;
    if (backward) c.models.backward = *backward;
    if (embeddings) c.models.embeddings = *embeddings;
    if (idf) c.models.idf = *idf;
    if (context) c.models.context = *context;
    if (no_copy) c.sequence.proposal.copy_enabled = false;
    if (omit_timing) c.omit_timing = true;
    c.validate();
    return c;
  }

  io::LoadMode load_mode() const { return strict ? io::LoadMode::kStrict : io::LoadMode::kLenient; }
};

void report_warnings(const std::vector<io::LoadWarning>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: line " << w.line << ": " << w.message << "\n";
}

std::vector<SequenceInput> sequence_inputs(const RunFlags& flags, const ExperimentConfig& c, std::ostream& err) {
  std::vector<SequenceInput> inputs;
  for (const auto& t : flags.texts) inputs.push_back({seq::tokenize(t), std::nullopt});
  if (!c.input.empty()) {
    std::vector<io::LoadWarning> warnings;
    auto loaded = load_sequence_inputs(c.input, flags.load_mode(), &warnings);
    report_warnings(warnings, err);
    for (auto& s : loaded) inputs.push_back(std::move(s));
  }
  if (inputs.empty()) throw ConfigError("no input: pass --input or --text");
  return inputs;
}

std::vector<io::Molecule> graph_inputs(const RunFlags& flags, const ExperimentConfig& c, std::ostream& err) {
  std::vector<io::Molecule> inputs;
  for (const auto& t : flags.texts) inputs.push_back({t, mol::parse_smiles(t)});
  if (!c.input.empty()) {
    if (!fs::exists(c.input)) throw ConfigError("input file not found: " + c.input);
    auto loaded = io::load_molecules(c.input, flags.load_mode());
    report_warnings(loaded.warnings, err);
    for (auto& m : loaded.items) inputs.push_back(std::move(m));
  }
  if (inputs.empty()) throw ConfigError("no input: pass --input or --text");
  return inputs;
}

mol::NodeContextModel load_context(const ExperimentConfig& c) {
  if (c.models.context.empty()) throw ConfigError("no node context model configured (--context-model)");
  if (!fs::exists(c.models.context)) throw ConfigError("node context model not found: " + c.models.context);
  return io::load_context_model(c.models.context);
}

// Writes to `path`, or to `fallback` when path is empty.
template <class Fn>
void emit(const std::string& path, std::ostream& fallback, Fn write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write " + path);
  write(file);
}

void write_trajectories(const std::string& dir, const std::vector<RunOutput>& runs) {
  if (dir.empty()) return;
  fs::create_directories(dir);
  for (const auto& r : runs) {
    std::ofstream file(fs::path(dir) / (r.record.run_id + ".csv"), std::ios::binary);
    if (!file) throw IoError("cannot write trajectory into " + dir);
    io::write_trajectory(file, r.trajectory);
  }
}

int cmd_train_lm(const std::string& corpus, const std::string& out_dir, int order, int min_count, double add_k,
                 bool strict, std::ostream& out, std::ostream& err) {
  if (!fs::exists(corpus)) throw ConfigError("corpus not found: " + corpus);
  auto loaded = io::load_sentences(corpus, strict ? io::LoadMode::kStrict : io::LoadMode::kLenient);
  report_warnings(loaded.warnings, err);
  seq::LmOptions options;
  options.order = order;
  options.min_count = min_count;
  options.add_k = add_k;
  options.validate();
  fs::create_directories(out_dir);
  const auto fwd = seq::LanguageModel::train(loaded.items, options);
  options.direction = seq::Direction::kBackward;
  const auto bwd = seq::LanguageModel::train(loaded.items, options);
  const fs::path dir(out_dir);
  io::save_language_model(dir / "forward.lm", fwd);
  io::save_language_model(dir / "backward.lm", bwd);
  io::save_idf(dir / "idf.txt", seq::compute_idf(loaded.items));
  out << "trained order-" << order << " models on " << loaded.items.size() << " sentences ("
      << fwd.words().size() << " words) into " << out_dir << "\n";
  return kExitOk;
}

int cmd_train_ctx(const std::string& corpus, const std::string& out_path, bool strict, std::ostream& out,
                  std::ostream& err) {
  if (!fs::exists(corpus)) throw ConfigError("corpus not found: " + corpus);
  auto loaded = io::load_molecules(corpus, strict ? io::LoadMode::kStrict : io::LoadMode::kLenient);
  report_warnings(loaded.warnings, err);
  const auto graphs = io::graphs_of(loaded);
  const auto model = mol::NodeContextModel::train(graphs);
  if (const auto parent = fs::path(out_path).parent_path(); !parent.empty()) fs::create_directories(parent);
  io::save_context_model(out_path, model);
  out << "trained node context model on " << graphs.size() << " molecules (" << model.counts().size()
      << " contexts) into " << out_path << "\n";
  return kExitOk;
}

int cmd_optimize(const RunFlags& flags, const std::string& trajectory_dir, std::ostream& out, std::ostream& err) {
  const ExperimentConfig c = flags.build();
  std::vector<RunOutput> runs;
  if (c.domain == Domain::kSequence) {
    const auto inputs = sequence_inputs(flags, c, err);
    const auto resources = SequenceResources::load(c.models);
    runs = run_sequence_batch(resources, c, inputs);
  } else {
    const auto inputs = graph_inputs(flags, c, err);
    const auto model = load_context(c);
    runs = run_graph_batch(model, c, inputs);
  }
  std::vector<io::RunRecord> records;
  std::size_t failed = 0;
  for (const auto& r : runs) {
    records.push_back(r.record);
    if (!r.record.error.empty()) {
      ++failed;
      err << "error: " << r.record.run_id << ": " << r.record.error << "\n";
    }
  }
  emit(flags.out_path, out, [&](std::ostream& o) { io::write_records(o, records); });
  write_trajectories(trajectory_dir, runs);
  return !records.empty() && failed == records.size() ? kExitFailure : kExitOk;
}

int cmd_benchmark(const RunFlags& flags, const std::string& records_path, std::ostream& out, std::ostream& err) {
  const ExperimentConfig c = flags.build();
  std::vector<BenchmarkRow> rows;
  std::vector<io::RunRecord> records;
  if (c.domain == Domain::kSequence) {
    const auto inputs = sequence_inputs(flags, c, err);
    const auto resources = SequenceResources::load(c.models);
    rows = benchmark_sequence(resources, c, inputs, &records);
  } else {
    const auto inputs = graph_inputs(flags, c, err);
    const auto model = load_context(c);
    rows = benchmark_graph(model, c, inputs, &records);
  }
  emit(flags.out_path, out, [&](std::ostream& o) { write_benchmark(o, rows); });
  if (!records_path.empty()) emit(records_path, out, [&](std::ostream& o) { io::write_records(o, records); });
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulated annealing over edit neighborhoods of sentences and molecules"};
  app.name("sags");
  app.require_subcommand(1);

  std::string corpus;
  std::string out_dir;
  int order = 3;
  int min_count = 2;
  double add_k = 0.01;
  bool strict = false;
  auto* train_lm = app.add_subcommand("train-lm", "Train forward and backward n-gram models and an idf table");
  train_lm->add_option("--corpus", corpus, "Sentence file, one per line")->required();
  train_lm->add_option("--out-dir", out_dir, "Directory for forward.lm, backward.lm and idf.txt")->required();
  train_lm->add_option("--order", order, "n-gram order")->check(CLI::Range(1, 5));
  train_lm->add_option("--min-count", min_count, "Words seen fewer times become <unk>");
  train_lm->add_option("--add-k", add_k, "Additive smoothing constant");
  train_lm->add_flag("--strict", strict, "Abort on the first malformed line");

  std::string ctx_out;
  auto* train_ctx = app.add_subcommand("train-ctx", "Train the node context model on a SMILES file");
  train_ctx->add_option("--corpus", corpus, "SMILES file, one per line")->required();
  train_ctx->add_option("--out", ctx_out, "Model file to write")->required();
  train_ctx->add_flag("--strict", strict, "Abort on the first malformed line");

  RunFlags optimize_flags;
  std::string trajectory_dir;
  auto* optimize = app.add_subcommand("optimize", "Optimize inputs and write one record per run");
  optimize_flags.attach(optimize);
  optimize->add_option("--trajectory-dir", trajectory_dir, "Write per-run trajectory CSVs here");

  RunFlags bench_flags;
  std::string records_path;
  auto* benchmark = app.add_subcommand("benchmark", "Run the ablation (sequence) or threshold (graph) sweep");
  bench_flags.attach(benchmark);
  benchmark->add_option("--records", records_path, "Also write every run record here");

  std::string gen_domain = "sequence";
  std::string gen_out;
  auto* gen = app.add_subcommand("gen-config", "Print a config file with every default filled in");
  gen->add_option("--domain", gen_domain, "sequence or graph");
  gen->add_option("--out", gen_out, "File to write (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*train_lm) return cmd_train_lm(corpus, out_dir, order, min_count, add_k, strict, out, err);
    if (*train_ctx) return cmd_train_ctx(corpus, ctx_out, strict, out, err);
    if (*optimize) return cmd_optimize(optimize_flags, trajectory_dir, out, err);
    if (*benchmark) return cmd_benchmark(bench_flags, records_path, out, err);
    if (*gen) {
      const auto text = to_json(ExperimentConfig::defaults(parse_domain(gen_domain))) + "\n";
      emit(gen_out, out, [&](std::ostream& o) { o << text; });
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace sags::cli
