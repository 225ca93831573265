#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sags/core/error.h"
#include "sags/core/rng.h"

namespace sags {

enum class Schedule { kLinear, kExponential, kLogarithmic, kConstant };

std::string_view to_string(Schedule schedule);
Schedule parse_schedule(std::string_view name);

// Temperature schedule, step budget and seed of one annealing run.
//
// A constant schedule with t_init = 0 is hill climbing; a constant schedule
// with t_init > 0 is fixed-temperature search (no annealing).
struct AnnealerConfig {
  double t_init = 0.03;
  double cooling_coeff = 3e-4;
  Schedule schedule = Schedule::kLinear;
  std::int64_t max_steps = 200;
  std::uint64_t seed = 0;
  bool include_initial_in_best = true;

  void validate() const;

  static AnnealerConfig hill_climbing(std::int64_t max_steps, std::uint64_t seed);
  static AnnealerConfig fixed_temperature(double t, std::int64_t max_steps, std::uint64_t seed);
};

// min(1, exp((f_new - f_old) / T)). At T = 0 this is the step function
// [f_new >= f_old]. A candidate scored -inf (or NaN) is never accepted.
double accept_probability(double f_new, double f_old, double temperature);

// linear:      max(0, t_init - c * step)
// exponential: t_init * exp(-c * step)
// logarithmic: t_init / ln(e + c * step)
// constant:    t_init
double temperature_at(const AnnealerConfig& config, std::int64_t step);

struct StepRecord {
  std::int64_t step = 0;
  bool accepted = false;
  // Objective of the current state after the step.
  double score = 0.0;
  double temperature = 0.0;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

template <class State>
struct OptimizationResult {
  State best_state;
  double best_score = -std::numeric_limits<double>::infinity();
  std::vector<StepRecord> trajectory;
  std::int64_t steps_run = 0;
};

// A search problem owns x_0, the objective f and the candidate generator.
// objective() must be deterministic for a fixed state; it may return -inf.
// The problem object is taken by mutable reference so per-run caches can
// live inside it.
template <class P>
concept SearchProblem = requires(P& problem, const typename P::State& state, CounterRng& rng) {
  typename P::State;
  { problem.initial_state() } -> std::convertible_to<typename P::State>;
  { problem.objective(state) } -> std::convertible_to<double>;
  { problem.propose(state, rng) } -> std::convertible_to<typename P::State>;
};

struct NoStepObserver {
  template <class State>
  void operator()(const StepRecord&, const State& /*candidate*/, double /*candidate_score*/) const {}
};

// Runs exactly config.max_steps iterations of propose / accept. Returns the
// best state among x_1..x_N (plus x_0 when include_initial_in_best). The
// observer sees every proposal together with the acceptance decision.
template <SearchProblem P, class Observer = NoStepObserver>
OptimizationResult<typename P::State> run_annealing(P& problem, const AnnealerConfig& config,
                                                    Observer&& observer = {}) {
  using State = typename P::State;
  config.validate();

  State current = problem.initial_state();
  double current_score = problem.objective(current);
  if (!std::isfinite(current_score)) {
    throw ConfigError("initial state has a non-finite objective");
  }

  OptimizationResult<State> result;
  result.best_state = current;
  if (config.include_initial_in_best) result.best_score = current_score;
  result.trajectory.reserve(static_cast<std::size_t>(config.max_steps));

  CounterRng rng(config.seed);
  for (std::int64_t step = 1; step <= config.max_steps; ++step) {
    const double temperature = temperature_at(config, step);
    State candidate = problem.propose(current, rng);
    const double candidate_score = problem.objective(candidate);
    const double p = accept_probability(candidate_score, current_score, temperature);
    // One uniform draw per step, consumed whether or not it matters.
    const bool accepted = rng.uniform() < p;

    StepRecord record{step, accepted, accepted ? candidate_score : current_score, temperature};
    observer(record, candidate, candidate_score);

    if (accepted) {
      current = std::move(candidate);
      current_score = candidate_score;
    }
    if (current_score > result.best_score) {
      result.best_score = current_score;
      result.best_state = current;
    }
    result.trajectory.push_back(record);
  }
  result.steps_run = config.max_steps;
  return result;
}

}  // namespace sags
