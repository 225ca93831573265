#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <vector>

#include "gtest/gtest.h"
#include "sags/core/annealer.h"
#include "sags/core/error.h"
#include "sags/core/genetic.h"
#include "sags/core/objective_report.h"
#include "sags/core/rng.h"

namespace sags {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// States are integers, x0 = 0, f(x) = -|x - 5|, moves are x +- 1.
struct WalkProblem {
  using State = int;
  int initial_state() const { return 0; }
  double objective(int x) const { return -std::abs(x - 5); }
  int propose(int x, CounterRng& rng) const { return rng.uniform_index(2) == 0 ? x - 1 : x + 1; }
};

// f(0) = 0.9, f(1) = 0, f(2) = 1 on a chain 0 - 1 - 2.
struct TrapProblem {
  using State = int;
  static constexpr std::array<double, 3> kScores{0.9, 0.0, 1.0};
  int initial_state() const { return 0; }
  double objective(int x) const { return kScores[static_cast<std::size_t>(x)]; }
  int propose(int x, CounterRng& rng) const {
    if (x == 0) return 1;
    if (x == 2) return 1;
    return rng.uniform_index(2) == 0 ? 0 : 2;
  }
};

// Every proposal is invalid.
struct DeadEndProblem {
  using State = int;
  int initial_state() const { return 0; }
  double objective(int x) const { return x == 0 ? 0.0 : -kInf; }
  int propose(int x, CounterRng&) const { return x + 1; }
};

struct ForcedStepProblem {
  using State = int;
  int initial_state() const { return 0; }
  double objective(int x) const { return -std::abs(x - 5); }
  int propose(int x, CounterRng&) const { return x + 1; }
};

template <class P>
struct Recorder {
  std::vector<double> accepted_scores;
  std::vector<double> rejected_scores;
  void operator()(const StepRecord& record, const typename P::State&, double candidate_score) {
    (record.accepted ? accepted_scores : rejected_scores).push_back(candidate_score);
  }
};

AnnealerConfig linear(double t_init, double c, std::int64_t steps, std::uint64_t seed) {
  AnnealerConfig config;
  config.t_init = t_init;
  config.cooling_coeff = c;
  config.schedule = Schedule::kLinear;
  config.max_steps = steps;
  config.seed = seed;
  return config;
}

TEST(AcceptProbability, Examples) {
  EXPECT_EQ(accept_probability(2.0, 1.0, 0.03), 1.0);
  EXPECT_NEAR(accept_probability(1.0, 1.03, 0.03), std::exp(-1.0), 1e-12);
  EXPECT_EQ(accept_probability(-kInf, 0.5, 0.05), 0.0);
}

TEST(AcceptProbability, ZeroTemperatureIsStepFunction) {
  EXPECT_EQ(accept_probability(1.0, 1.0, 0.0), 1.0);
  EXPECT_EQ(accept_probability(1.5, 1.0, 0.0), 1.0);
  EXPECT_EQ(accept_probability(0.999, 1.0, 0.0), 0.0);
}

TEST(AcceptProbability, NanAndNegativeInfinityRejectedAtAnyTemperature) {
  for (double t : {0.0, 1e-6, 1.0, 1e9, kInf}) {
    EXPECT_EQ(accept_probability(-kInf, 0.0, t), 0.0) << t;
    EXPECT_EQ(accept_probability(std::nan(""), 0.0, t), 0.0) << t;
  }
}

TEST(AcceptProbability, MonotoneInScoreAndTemperature) {
  CounterRng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const double f_old = rng.uniform() * 4 - 2;
    const double a = rng.uniform() * 4 - 2;
    const double b = a + rng.uniform();
    const double t1 = rng.uniform();
    const double t2 = t1 + rng.uniform();
    const double p = accept_probability(a, f_old, t1);
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0);
    EXPECT_LE(p, accept_probability(b, f_old, t1));
    if (a < f_old) {
      EXPECT_LE(p, accept_probability(a, f_old, t2));
    }
  }
}

TEST(Temperature, Examples) {
  EXPECT_EQ(temperature_at(linear(0.03, 3e-4, 1, 0), 100), 0.0);
  EXPECT_NEAR(temperature_at(linear(0.03, 3e-4, 1, 0), 50), 0.015, 1e-15);
  AnnealerConfig log_config = linear(0.05, 0.8, 1, 0);
  log_config.schedule = Schedule::kLogarithmic;
  EXPECT_DOUBLE_EQ(temperature_at(log_config, 0), 0.05);
  AnnealerConfig exp_config = linear(0.01, 0.1, 1, 0);
  exp_config.schedule = Schedule::kExponential;
  EXPECT_NEAR(temperature_at(exp_config, 10), 0.01 * std::exp(-1.0), 1e-15);
}

TEST(Temperature, NonIncreasingAndNonNegative) {
  for (Schedule s : {Schedule::kLinear, Schedule::kExponential, Schedule::kLogarithmic, Schedule::kConstant}) {
    AnnealerConfig config = linear(0.07, 3e-3, 1, 0);
    config.schedule = s;
    double previous = temperature_at(config, 0);
    for (std::int64_t step = 1; step <= 5000; ++step) {
      const double t = temperature_at(config, step);
      EXPECT_GE(t, 0.0);
      ASSERT_LE(t, previous) << to_string(s) << " step " << step;
      previous = t;
    }
  }
}

TEST(Schedule, NamesRoundTrip) {
  for (Schedule s : {Schedule::kLinear, Schedule::kExponential, Schedule::kLogarithmic, Schedule::kConstant}) {
    EXPECT_EQ(parse_schedule(to_string(s)), s);
  }
  EXPECT_THROW(parse_schedule("cubic"), ConfigError);
}

TEST(AnnealerConfig, Validation) {
  AnnealerConfig config;
  config.max_steps = 0;
  EXPECT_THROW(config.validate(), ConfigError);
  config = AnnealerConfig{};
  config.t_init = -1;
  EXPECT_THROW(config.validate(), ConfigError);
  config = AnnealerConfig{};
  config.cooling_coeff = -1e-3;
  EXPECT_THROW(config.validate(), ConfigError);
  EXPECT_NO_THROW(AnnealerConfig{}.validate());
}

TEST(RunAnnealing, GreedyWalkReachesOptimum) {
  WalkProblem problem;
  // The reachable window after 50 steps is [-50, 50]; f is maximal at 5 only.
  int argmax = -50;
  for (int x = -50; x <= 50; ++x) {
    if (problem.objective(x) > problem.objective(argmax)) argmax = x;
  }
  ASSERT_EQ(argmax, 5);
  const auto result = run_annealing(problem, AnnealerConfig::hill_climbing(50, 3));
  EXPECT_EQ(result.best_state, 5);
  EXPECT_EQ(result.best_score, 0.0);
  EXPECT_EQ(result.steps_run, 50);
  EXPECT_EQ(result.trajectory.size(), 50u);
}

TEST(RunAnnealing, SingleForcedStep) {
  ForcedStepProblem problem;
  const auto result = run_annealing(problem, AnnealerConfig::hill_climbing(1, 0));
  EXPECT_EQ(result.best_state, 1);
  EXPECT_EQ(result.best_score, -4.0);
}

TEST(RunAnnealing, TrapStaysAtLocalOptimumWhenGreedy) {
  TrapProblem problem;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto result = run_annealing(problem, AnnealerConfig::hill_climbing(200, seed));
    EXPECT_EQ(result.best_score, 0.9);
  }
}

TEST(RunAnnealing, TrapEscapedByAnnealing) {
  TrapProblem problem;
  int reached = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto result = run_annealing(problem, linear(0.5, 0.5 / 200, 200, seed));
    if (result.best_score == 1.0) ++reached;
  }
  EXPECT_GE(reached, 95);
}

TEST(RunAnnealing, Reproducible) {
  WalkProblem problem;
  const auto config = linear(0.5, 1e-3, 300, 42);
  const auto a = run_annealing(problem, config);
  const auto b = run_annealing(problem, config);
  EXPECT_EQ(a.trajectory, b.trajectory);
  EXPECT_EQ(a.best_state, b.best_state);
  const auto c = run_annealing(problem, linear(0.5, 1e-3, 300, 43));
  EXPECT_NE(a.trajectory, c.trajectory);
}

TEST(RunAnnealing, BestDominatesAcceptedStates) {
  WalkProblem problem;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Recorder<WalkProblem> recorder;
    const auto result = run_annealing(problem, linear(2.0, 1e-3, 400, seed), recorder);
    EXPECT_GE(result.best_score, problem.objective(0));
    for (double s : recorder.accepted_scores) EXPECT_LE(s, result.best_score);
    for (const auto& r : result.trajectory) EXPECT_LE(r.score, result.best_score);
  }
}

TEST(RunAnnealing, ExcludingInitialState) {
  ForcedStepProblem problem;
  // Walks 0 -> 1 -> ... -> 10; best among x1..x10 is 5.
  AnnealerConfig config = AnnealerConfig::fixed_temperature(100.0, 10, 0);
  config.include_initial_in_best = false;
  const auto result = run_annealing(problem, config);
  EXPECT_EQ(result.best_state, 5);
}

TEST(RunAnnealing, NegativeInfinityNeverAccepted) {
  DeadEndProblem problem;
  Recorder<DeadEndProblem> recorder;
  const auto result = run_annealing(problem, AnnealerConfig::fixed_temperature(1e6, 100, 1), recorder);
  EXPECT_TRUE(recorder.accepted_scores.empty());
  EXPECT_EQ(result.best_state, 0);
}

TEST(RunAnnealing, HillClimbingNeverAcceptsWorse) {
  WalkProblem problem;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto result = run_annealing(problem, AnnealerConfig::hill_climbing(100, seed));
    double previous = problem.objective(0);
    for (const auto& r : result.trajectory) {
      EXPECT_GE(r.score, previous);
      EXPECT_EQ(r.temperature, 0.0);
      previous = r.score;
    }
  }
}

TEST(RunAnnealing, OneUniformDrawPerStep) {
  struct CountingProblem {
    using State = int;
    int initial_state() const { return 0; }
    double objective(int) const { return 0.0; }
    int propose(int x, CounterRng&) const { return x; }
  } problem;
  std::uint64_t draws = 0;
  // The engine rng is private; count through a proposal that reports it.
  struct Probe {
    using State = int;
    std::uint64_t* draws;
    int initial_state() const { return 0; }
    double objective(int) const { return 0.0; }
    int propose(int x, CounterRng& rng) const {
      *draws = rng.draws();
      return x;
    }
  } probe{&draws};
  run_annealing(probe, AnnealerConfig::hill_climbing(10, 0));
  // Before step 10's proposal, nine acceptance draws have happened.
  EXPECT_EQ(draws, 9u);
  EXPECT_NO_THROW(run_annealing(problem, AnnealerConfig::hill_climbing(3, 0)));
}

TEST(RunAnnealing, RejectsInvalidInitialState) {
  struct Bad {
    using State = int;
    int initial_state() const { return 0; }
    double objective(int) const { return -kInf; }
    int propose(int x, CounterRng&) const { return x; }
  } problem;
  EXPECT_THROW(run_annealing(problem, AnnealerConfig{}), ConfigError);
}

int pick_parent(int a, int b, CounterRng& rng) { return rng.uniform() < 0.5 ? a : b; }

TEST(RunGenetic, ToyProblemReachesOptimum) {
  WalkProblem problem;
  GaConfig config;
  config.population_size = 8;
  config.generations = 30;
  config.seed = 5;
  const auto result = run_genetic(problem, pick_parent, config);
  EXPECT_EQ(result.best_score, 0.0);
  EXPECT_EQ(result.best_state, 5);
  EXPECT_EQ(result.trajectory.size(), 30u);
}

TEST(RunGenetic, NoOperatorsKeepsPopulation) {
  WalkProblem problem;
  GaConfig config;
  config.population_size = 4;
  config.p_mutation = 0.0;
  config.p_crossover = 0.0;
  config.generations = 10;
  const auto result = run_genetic(problem, pick_parent, config);
  EXPECT_EQ(result.population, std::vector<int>(4, 0));
  EXPECT_EQ(result.best_score, -5.0);
  for (const auto& r : result.trajectory) EXPECT_FALSE(r.accepted);
}

TEST(RunGenetic, WithoutCrossoverSlotsAreIndependentClimbers) {
  WalkProblem problem;
  GaConfig config;
  config.population_size = 6;
  config.p_crossover = 0.0;
  config.p_mutation = 0.7;
  config.generations = 25;
  config.seed = 100;
  std::vector<std::vector<int>> slots(6);
  run_genetic(problem, pick_parent, config, [&](int, std::span<const int> pop, std::span<const double>) {
    for (std::size_t i = 0; i < pop.size(); ++i) slots[i].push_back(pop[i]);
  });
  for (std::size_t i = 0; i < 6; ++i) {
    GaConfig single = config;
    single.population_size = 1;
    single.seed = config.seed + i;
    std::vector<int> alone;
    run_genetic(problem, pick_parent, single,
                [&](int, std::span<const int> pop, std::span<const double>) { alone.push_back(pop[0]); });
    EXPECT_EQ(slots[i], alone) << "slot " << i;
  }
}

TEST(RunGenetic, ElitismKeepsBest) {
  WalkProblem problem;
  GaConfig config;
  config.population_size = 5;
  config.generations = 20;
  config.p_crossover = 0.5;
  double previous = -kInf;
  run_genetic(problem, pick_parent, config, [&](int, std::span<const int>, std::span<const double> scores) {
    const double best = *std::max_element(scores.begin(), scores.end());
    EXPECT_GE(best, previous);
    previous = best;
  });
}

TEST(GaConfig, Validation) {
  GaConfig config;
  config.p_mutation = 1.5;
  EXPECT_THROW(config.validate(), ConfigError);
  config = GaConfig{};
  config.population_size = 0;
  EXPECT_THROW(config.validate(), ConfigError);
  config = GaConfig{};
  config.generations = 0;
  EXPECT_THROW(config.validate(), ConfigError);
}

TEST(CounterRng, DeterministicAndSeedSensitive) {
  CounterRng a(9), b(9), c(10), d(9, 1);
  bool differs_seed = false, differs_stream = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    differs_seed = differs_seed || x != c();
    differs_stream = differs_stream || x != d();
  }
  EXPECT_TRUE(differs_seed);
  EXPECT_TRUE(differs_stream);
  EXPECT_EQ(a.draws(), 100u);
}

TEST(CounterRng, UniformRangeAndMean) {
  CounterRng rng(1);
  double sum = 0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.01);
}

TEST(CounterRng, CategoricalFollowsWeights) {
  CounterRng rng(2);
  const std::vector<double> weights{1.0, 0.0, 3.0};
  std::array<int, 3> hits{};
  for (int i = 0; i < 40000; ++i) ++hits[rng.categorical(weights)];
  EXPECT_EQ(hits[1], 0);
  EXPECT_NEAR(hits[2] / 40000.0, 0.75, 0.01);
  const std::vector<double> zero{0.0, 0.0};
  EXPECT_THROW(rng.categorical(zero), ConfigError);
}

TEST(CounterRng, UniformIndexCoversRange) {
  CounterRng rng(3);
  std::map<std::uint64_t, int> seen;
  for (int i = 0; i < 7000; ++i) ++seen[rng.uniform_index(7)];
  ASSERT_EQ(seen.size(), 7u);
  for (const auto& [k, v] : seen) EXPECT_NEAR(v, 1000, 150) << k;
}

TEST(ObjectiveReport, TermsRoundTrip) {
  ObjectiveReport report;
  report.terms = {{"sim_key", 0.1}, {"flu", 1e-300}, {"exp", 1.0 / 3.0}};
  const auto text = report.format_terms();
  EXPECT_EQ(ObjectiveReport::parse_terms(text), report.terms);
  EXPECT_TRUE(ObjectiveReport::parse_terms("").empty());
}

}  // namespace
}  // namespace sags
