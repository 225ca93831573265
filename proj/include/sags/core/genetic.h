#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sags/core/annealer.h"
#include "sags/core/error.h"
#include "sags/core/rng.h"

namespace sags {

struct GaConfig {
  int population_size = 16;
  double p_mutation = 0.8;
  double p_crossover = 0.3;
  int generations = 50;
  std::uint64_t seed = 0;

  void validate() const;
};

template <class State>
struct GeneticResult : OptimizationResult<State> {
  std::vector<State> population;
  std::vector<double> scores;
};

struct NoGenerationObserver {
  template <class State>
  void operator()(int /*generation*/, std::span<const State>, std::span<const double>) const {}
};

// Generational evolution over a population seeded with copies of x_0.
//
// Each population slot i owns the random stream CounterRng(seed + i). Per
// generation and slot: with probability p_crossover a mate is drawn by
// fitness-proportional selection on exp(f) and the slot's individual is
// recombined with it; with probability p_mutation the result is mutated by
// problem.propose. The child replaces its parent when it scores at least as
// well, so the best individual is never lost. With crossover disabled each
// slot is an independent mutation hill climber, identical to a
// population-of-1 run seeded with seed + i.
//
// The trajectory holds one record per generation: accepted is true when any
// slot was replaced, score is the best score in the population.
template <SearchProblem P, class Crossover, class Observer = NoGenerationObserver>
GeneticResult<typename P::State> run_genetic(P& problem, Crossover&& crossover, const GaConfig& config,
                                             Observer&& observer = {}) {
  using State = typename P::State;
  config.validate();

  const auto size = static_cast<std::size_t>(config.population_size);
  State initial = problem.initial_state();
  const double initial_score = problem.objective(initial);
  if (!std::isfinite(initial_score)) {
    throw ConfigError("initial individual has a non-finite objective");
  }

  GeneticResult<State> result;
  result.population.assign(size, initial);
  result.scores.assign(size, initial_score);
  result.best_state = initial;
  result.best_score = initial_score;
  result.trajectory.reserve(static_cast<std::size_t>(config.generations));

  std::vector<CounterRng> streams;
  streams.reserve(size);
  for (std::size_t i = 0; i < size; ++i) streams.emplace_back(config.seed + i);

  std::vector<double> weights(size);
  std::vector<State> children(size);
  std::vector<double> child_scores(size);

  for (int generation = 1; generation <= config.generations; ++generation) {
    const double top = *std::max_element(result.scores.begin(), result.scores.end());
    for (std::size_t i = 0; i < size; ++i) weights[i] = std::exp(result.scores[i] - top);

    for (std::size_t i = 0; i < size; ++i) {
      CounterRng& rng = streams[i];
      State child = result.population[i];
      if (rng.uniform() < config.p_crossover) {
        const std::size_t mate = rng.categorical(weights);
        child = crossover(result.population[i], result.population[mate], rng);
      }
      if (rng.uniform() < config.p_mutation) {
        child = problem.propose(child, rng);
      }
      child_scores[i] = problem.objective(child);
      children[i] = std::move(child);
    }

    bool replaced = false;
    for (std::size_t i = 0; i < size; ++i) {
      if (child_scores[i] >= result.scores[i]) {
        replaced = replaced || !(child_scores[i] == result.scores[i] && children[i] == result.population[i]);
        result.population[i] = std::move(children[i]);
        result.scores[i] = child_scores[i];
      }
      if (result.scores[i] > result.best_score) {
        result.best_score = result.scores[i];
        result.best_state = result.population[i];
      }
    }
    const double best_now = *std::max_element(result.scores.begin(), result.scores.end());
    result.trajectory.push_back(StepRecord{generation, replaced, best_now, 0.0});
    observer(generation, std::span<const State>(result.population), std::span<const double>(result.scores));
  }
  result.steps_run = config.generations;
  return result;
}

}  // namespace sags
