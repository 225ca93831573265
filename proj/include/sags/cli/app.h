#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "sags/cli/config.h"
#include "sags/cli/runner.h"

namespace sags::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `sags` tool: train-lm, train-ctx, optimize, benchmark,
// gen-config. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchmarkRow {
  std::string setting;
  std::vector<std::pair<std::string, double>> values;
  std::size_t runs = 0;
  std::size_t failed = 0;
};

// Ablation rows of a paraphrasing benchmark (every input needs a reference):
// full, w/o sim_key, w/o sim_sen, w/o exp, w/o copy, w/o annealing.
std::vector<BenchmarkRow> benchmark_sequence(const SequenceResources& resources, const ExperimentConfig& config,
                                             std::span<const SequenceInput> inputs,
                                             std::vector<io::RunRecord>* records = nullptr);
// One row per similarity threshold 0.0, 0.2, 0.4, 0.6.
std::vector<BenchmarkRow> benchmark_graph(const mol::NodeContextModel& model, const ExperimentConfig& config,
                                          std::span<const io::Molecule> inputs,
                                          std::vector<io::RunRecord>* records = nullptr);

void write_benchmark(std::ostream& out, std::span<const BenchmarkRow> rows);

}  // namespace sags::cli
