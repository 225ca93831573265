#include "sags/metrics/stats.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sags/core/error.h"

namespace sags::metrics {

ImprovementStats improvement_stats(std::span<const RunOutcome> runs) {
  if (runs.empty()) throw InputError("improvement_stats: no runs");
  std::vector<double> improvements;
  for (const auto& run : runs) {
    if (run.valid) improvements.push_back(run.output_score - run.input_score);
  }
  ImprovementStats stats;
  stats.valid_runs = improvements.size();
  stats.success_rate = static_cast<double>(improvements.size()) / static_cast<double>(runs.size());
  if (improvements.empty()) return stats;
  // Sorting makes the floating-point sums independent of input order.
  std::sort(improvements.begin(), improvements.end());
  double sum = 0.0;
  for (double v : improvements) sum += v;
  stats.mean = sum / static_cast<double>(improvements.size());
  double sq = 0.0;
  for (double v : improvements) sq += (v - stats.mean) * (v - stats.mean);
  stats.stddev = std::sqrt(sq / static_cast<double>(improvements.size()));
  return stats;
}

}  // namespace sags::metrics
