#include <algorithm>
#include <cstdio>

#include "sags/cli/app.h"
#include "sags/io/records.h"
#include "sags/metrics/bleu.h"
#include "sags/metrics/stats.h"

namespace sags::cli {
namespace {

// Sum in sorted order so the total does not depend on run order.
double ordered_mean(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

BenchmarkRow summarize_sequence(const std::string& setting, const ExperimentConfig& config,
                                std::span<const SequenceInput> inputs, const std::vector<RunOutput>& runs) {
  BenchmarkRow row;
  row.setting = setting;
  row.runs = runs.size();
  std::vector<metrics::Segment> to_ref;
  std::vector<metrics::Segment> to_src;
  std::vector<double> rouge1;
  std::vector<double> rouge2;
  const auto per_input = static_cast<std::size_t>(config.runs_per_input);
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& rec = runs[i].record;
    if (!rec.error.empty()) {
      ++row.failed;
      continue;
    }
    const SequenceInput& in = inputs[i / per_input];
    const auto output = seq::tokenize(rec.output).words();
    to_ref.push_back({output, in.reference->words()});
    to_src.push_back({output, in.source.words()});
    for (const auto& [name, value] : rec.metrics) {
      if (name == "rouge1") rouge1.push_back(value);
      if (name == "rouge2") rouge2.push_back(value);
    }
  }
  const auto& bleu_cfg = config.sequence.objective.bleu;
  const double b_ref = to_ref.empty() ? 0.0 : metrics::corpus_bleu(to_ref, bleu_cfg);
  const double b_src = to_src.empty() ? 0.0 : metrics::corpus_bleu(to_src, bleu_cfg);
  const double alpha = config.sequence.ibleu_alpha;
  row.values = {{"ibleu", alpha * b_ref - (1.0 - alpha) * b_src},
                {"bleu", b_ref},
                {"rouge1", ordered_mean(rouge1)},
                {"rouge2", ordered_mean(rouge2)}};
  return row;
}

}  // namespace

std::vector<BenchmarkRow> benchmark_sequence(const SequenceResources& resources, const ExperimentConfig& config,
                                             std::span<const SequenceInput> inputs,
                                             std::vector<io::RunRecord>* records) {
  for (const auto& in : inputs) {
    if (!in.reference) throw ConfigError("sequence benchmark needs source<TAB>reference input lines");
  }
  std::vector<std::pair<std::string, ExperimentConfig>> settings;
  settings.emplace_back("full", config);
  auto variant = [&](const char* name, auto edit) {
    ExperimentConfig c = config;
    edit(c);
    settings.emplace_back(name, c);
  };
  variant("w/o sim_key", [](ExperimentConfig& c) { c.sequence.objective.p_keyword = 0.0; });
  variant("w/o sim_sen", [](ExperimentConfig& c) { c.sequence.objective.q_sentence = 0.0; });
  variant("w/o exp", [](ExperimentConfig& c) { c.sequence.objective.s_diversity = 0.0; });
  variant("w/o copy", [](ExperimentConfig& c) { c.sequence.proposal.copy_enabled = false; });
  variant("w/o annealing", [](ExperimentConfig& c) { c.mode = Mode::kFixedTemperature; });

  std::vector<BenchmarkRow> rows;
  for (const auto& [name, c] : settings) {
    auto runs = run_sequence_batch(resources, c, inputs);
    rows.push_back(summarize_sequence(name, c, inputs, runs));
    if (records) {
      for (auto& r : runs) records->push_back(std::move(r.record));
    }
  }
  return rows;
}

std::vector<BenchmarkRow> benchmark_graph(const mol::NodeContextModel& model, const ExperimentConfig& config,
                                          std::span<const io::Molecule> inputs,
                                          std::vector<io::RunRecord>* records) {
  std::vector<BenchmarkRow> rows;
  for (double delta : {0.0, 0.2, 0.4, 0.6}) {
    ExperimentConfig c = config;
    c.graph.objective.sim_threshold = delta;
    auto runs = run_graph_batch(model, c, inputs);
    BenchmarkRow row;
    char label[32];
    std::snprintf(label, sizeof(label), "sim>%.1f", delta);
    row.setting = label;
    row.runs = runs.size();
    std::vector<metrics::RunOutcome> outcomes;
    for (const auto& run : runs) {
      const auto& rec = run.record;
      if (!rec.error.empty()) {
        ++row.failed;
        outcomes.push_back({0.0, 0.0, false});
        continue;
      }
      outcomes.push_back({rec.metrics[0].second, rec.metrics[1].second, rec.metrics[4].second > 0.5});
    }
    if (!outcomes.empty()) {
      const auto stats = metrics::improvement_stats(outcomes);
      row.values = {{"similarity_threshold", delta},
                    {"improvement", stats.mean},
                    {"improvement_std", stats.stddev},
                    {"success", stats.success_rate}};
    }
    rows.push_back(std::move(row));
    if (records) {
      for (auto& r : runs) records->push_back(std::move(r.record));
    }
  }
  return rows;
}

void write_benchmark(std::ostream& out, std::span<const BenchmarkRow> rows) {
  out << "setting,runs,failed";
  if (!rows.empty()) {
    for (const auto& [name, v] : rows.front().values) out << "," << name;
  }
  const bool graph = !rows.empty() && !rows.front().values.empty() &&
                     rows.front().values.front().first == "similarity_threshold";
  if (graph) out << ",improvement_pm,success_pct";
  out << "\n";
  for (const auto& row : rows) {
    out << io::csv_escape(row.setting) << "," << row.runs << "," << row.failed;
    for (const auto& [name, v] : row.values) out << "," << io::format_double(v);
    if (graph && row.values.size() == 4) {
      char pm[96];
      std::snprintf(pm, sizeof(pm), "%.2f \xC2\xB1 %.2f,%.2f%%", row.values[1].second, row.values[2].second,
                    100.0 * row.values[3].second);
      out << "," << pm;
    }
    out << "\n";
  }
}

}  // namespace sags::cli
