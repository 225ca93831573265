#pragma once

#include <span>

namespace sags::metrics {

struct RunOutcome {
  double input_score = 0.0;
  double output_score = 0.0;
  // Output is valid and meets the run's success condition.
  bool valid = false;
};

struct ImprovementStats {
  double mean = 0.0;
  // Population standard deviation.
  double stddev = 0.0;
  // Fraction in [0, 1].
  double success_rate = 0.0;
  std::size_t valid_runs = 0;
};

// Improvement statistics over valid runs. Throws InputError on empty input.
// The result does not depend on the order of runs.
ImprovementStats improvement_stats(std::span<const RunOutcome> runs);

}  // namespace sags::metrics
