// Copyright 2026 The fkss Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "fkss/core.hpp"
#include "fkss/exact/brute_force.hpp"
#include "fkss/gen.hpp"
#include "fkss/lp/feasibility.hpp"
#include "fkss/rng.hpp"
#include "fkss/rounding/independent.hpp"
#include "fkss/rounding/lll.hpp"
#include "fkss/rounding/pipage.hpp"
#include "fkss/rounding/trials.hpp"

namespace fkss {
namespace {

constexpr long kStatTrials = 100000;

// Unit tests check many coordinates at once, so they use 4 sigma; the
// acceptance binary applies the 3 sigma criteria.
constexpr double kSigmas = 4.0;

double binomial_sigma(double p, long trials) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

// ---------------------------------------------------------------- pipage

TEST(PipageTest, IntegralInputUnchanged) {
  Rng rng(1);
  PipageTrace trace;
  EXPECT_EQ(pipage_rounding({1, 0, 1, 0}, 2, rng, &trace), (std::vector<int>{0, 2}));
  EXPECT_EQ(trace.iterations, 0);
}

TEST(PipageTest, RejectsWrongSum) {
  Rng rng(1);
  EXPECT_THROW(pipage_rounding({0.5, 0.6}, 1, rng), InputError);
  EXPECT_THROW(pipage_rounding({1.5, -0.5}, 1, rng), InputError);
}

TEST(PipageTest, SizeSumAndIterationInvariants) {
  Rng source(99);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = static_cast<int>(source.between(1, 12));
    std::vector<double> x(static_cast<size_t>(m));
    for (double& v : x) v = source.uniform();
    const double total = std::accumulate(x.begin(), x.end(), 0.0);
    if (total < 1.0) continue;
    const int k = static_cast<int>(std::floor(total));
    const FractionalSolution trimmed = trim_to_demand({x, 1.0, false}, k);
    Rng rng(static_cast<uint64_t>(trial));
    PipageTrace trace;
    const auto chosen = pipage_rounding(trimmed.x, k, rng, &trace);
    EXPECT_EQ(static_cast<int>(chosen.size()), k);
    EXPECT_LE(trace.iterations, m);
    for (double s : trace.sums) EXPECT_NEAR(s, k, 1e-9);
  }
}

TEST(PipageTest, SameSeedSameOutput) {
  const std::vector<double> x{0.2, 0.4, 0.6, 0.8};
  Rng a(7), b(7);
  EXPECT_EQ(pipage_rounding(x, 2, a), pipage_rounding(x, 2, b));
}

TEST(PipageTest, SymmetricHalf) {
  const Instance instance = make_instance(2, {{0}, {1}}, 1);
  const TrialStats stats = run_trials(RoundingAlgorithm::kPipage, instance, {{0.5, 0.5}, 1, false},
                                      seed_range(0, kStatTrials));
  for (double f : stats.frequency) {
    EXPECT_NEAR(f, 0.5, 3 * binomial_sigma(0.5, kStatTrials));
  }
  EXPECT_EQ(stats.feasible_rate, 1.0);
}

TEST(PipageTest, SkewedMarginal) {
  const Instance instance = make_instance(2, {{0}, {1}}, 1);
  const TrialStats stats = run_trials(RoundingAlgorithm::kPipage, instance, {{0.3, 0.7}, 1, false},
                                      seed_range(1000, kStatTrials));
  EXPECT_NEAR(stats.frequency[0], 0.3, 3 * binomial_sigma(0.3, kStatTrials));
  EXPECT_NEAR(stats.frequency[1], 0.7, 3 * binomial_sigma(0.7, kStatTrials));
}

TEST(PipageTest, MarginalsAndNegativeCorrelationOnFiveCandidates) {
  const std::vector<double> x{0.9, 0.35, 0.15, 0.4, 0.2};
  const Instance instance = make_instance(5, {{0, 1}, {2, 3, 4}}, 2);
  const TrialStats stats = run_trials(RoundingAlgorithm::kPipage, instance, {x, 1, false},
                                      seed_range(5000, kStatTrials));
  for (size_t v = 0; v < x.size(); ++v) {
    EXPECT_NEAR(stats.frequency[v], x[v], kSigmas * binomial_sigma(x[v], kStatTrials)) << v;
  }
  for (size_t u = 0; u < x.size(); ++u) {
    for (size_t v = u + 1; v < x.size(); ++v) {
      const double product = stats.frequency[u] * stats.frequency[v];
      EXPECT_LE(stats.joint[u][v], product + kSigmas * binomial_sigma(product, kStatTrials))
          << u << "," << v;
    }
  }
}

// ----------------------------------------------------------- independent

Instance hundred_agents(uint64_t seed) {
  return gen_random_bipartite(100, 100, 5, 10, WeightSpec::unit(), seed);
}

TEST(IndependentTest, RejectsSmallN) {
  Rng rng(0);
  const Instance small = make_instance(2, {{0}, {1}}, 1);
  EXPECT_THROW(independent_rounding(small, {{0.5, 0.5}, 1, false}, rng), InputError);
}

TEST(IndependentTest, LargeCoordinatesAreDeterministic) {
  const Instance instance = hundred_agents(1);
  std::vector<double> x(100, 0.0);
  for (int v = 0; v < 10; ++v) x[static_cast<size_t>(v * 3)] = 0.5;
  for (uint64_t seed = 0; seed < 5; ++seed) {
    Rng rng(seed);
    const Selection s = independent_rounding(instance, {x, 1, false}, rng);
    // The small-coordinate remainder is empty, so only its lowest index
    // (candidate 1) is added.
    std::vector<int> expected;
    for (int v = 0; v < 10; ++v) expected.push_back(v * 3);
    expected.push_back(1);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(s.chosen, expected);
  }
}

TEST(IndependentTest, SmallMassTakesLowestIndex) {
  const Instance instance = hundred_agents(2);
  std::vector<double> x(100, 0.0);
  x[40] = 1.0;
  x[7] = 0.02;
  x[3] = 0.03;  // both below ln ln 100 / (10 ln 100) ~ 0.0332; their sum is 0.05
  Rng rng(0);
  const Selection s = independent_rounding(instance, {x, 1, false}, rng);
  EXPECT_EQ(s.chosen, (std::vector<int>{0, 40}));
}

TEST(IndependentTest, FrequenciesAndPairwiseIndependence) {
  const Instance instance = hundred_agents(3);
  std::vector<double> x(100, 0.0);
  for (size_t v = 0; v < 60; ++v) x[v] = 0.02;  // sum 1.2 > 1
  for (size_t v = 60; v < 70; ++v) x[v] = 0.5;
  const double boost = independent_boost(100);
  const double p = boost * 0.02;
  const TrialStats stats = run_trials(RoundingAlgorithm::kIndependent, instance, {x, 1, false},
                                      seed_range(0, kStatTrials));
  for (size_t v = 0; v < 60; ++v) {
    EXPECT_NEAR(stats.frequency[v], p, kSigmas * binomial_sigma(p, kStatTrials)) << v;
  }
  for (size_t v = 60; v < 70; ++v) EXPECT_EQ(stats.frequency[v], 1.0);
  for (size_t v = 70; v < 100; ++v) EXPECT_EQ(stats.frequency[v], 0.0);
  for (size_t u = 0; u < 6; ++u) {
    for (size_t v = u + 1; v < 6; ++v) {
      const double product = stats.frequency[u] * stats.frequency[v];
      EXPECT_NEAR(stats.joint[u][v], product, kSigmas * binomial_sigma(product, kStatTrials));
    }
  }
}

// ------------------------------------------------------------------- lll

// Four agents and four candidates forming an 8-cycle; each candidate block
// {0,1} and {2,3} touches three agents.
Instance eight_cycle() { return make_instance(4, {{0, 1}, {1, 2}, {0, 3}, {2, 3}}, 2); }

TEST(BadEventsTest, EightCycleSystem) {
  const BadEventSystem system =
      build_bad_events(eight_cycle(), {0.5, 0.5, 0.5, 0.5}, {0, 0, 0, 0}, 1.0, 2, false, 0.5);
  ASSERT_EQ(system.events.size(), 6u);
  EXPECT_EQ(system.performance_count(), 4);
  EXPECT_EQ(system.feasibility_count(), 2);
  EXPECT_EQ(system.events[4].vars, (std::vector<int>{0, 1}));
  EXPECT_EQ(system.events[5].vars, (std::vector<int>{2, 3}));
  EXPECT_EQ(system.dependency[4], (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(system.dependency[5], (std::vector<int>{1, 2, 3}));
  // Agent 1 meets agents 0 and 3 and both blocks.
  EXPECT_EQ(system.dependency[1], (std::vector<int>{0, 3, 4, 5}));
  EXPECT_EQ(system.dependency_degree, 4);
  for (double p : system.probability) EXPECT_DOUBLE_EQ(p, 0.5);
}

TEST(BadEventsTest, ShortLastBlockWithoutEvent) {
  const Instance instance = make_instance(6, {{0, 1, 2, 3, 4}, {5}}, 1);
  const BadEventSystem system = build_bad_events(
      instance, {0.1, 0.1, 0.1, 0.1, 0.1, 0.6}, {0, 0, 0, 0, 0, 0}, 1.0, 5, false, 0.5);
  EXPECT_EQ(system.feasibility_count(), 1);
  EXPECT_EQ(system.events.back().vars.size(), 5u);
}

TEST(BadEventsTest, SingleBlockDegreeBounds) {
  const Instance instance = make_instance(3, {{0, 1, 2}}, 1);
  const BadEventSystem system =
      build_bad_events(instance, {0.3, 0.3, 0.4}, {0, 0, 0}, 1.0, 3, false, 0.5);
  EXPECT_EQ(system.feasibility_count(), 1);
  EXPECT_GE(system.dependency_degree, 1);
  EXPECT_LE(system.dependency_degree, 9);
}

TEST(BadEventsTest, RejectsCertainCandidates) {
  EXPECT_THROW(build_bad_events(eight_cycle(), {0.5, 0.5, 0.5, 0.5}, {0, 0, 0, 0}, 1.0, 2, false),
               InputError);
}

TEST(BadEventsTest, DegreeBoundsOnRandomSystems) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const int delta = static_cast<int>(rng.between(1, 5));
    const int m = static_cast<int>(rng.between(1, 15));
    const int n = static_cast<int>(rng.between((m + delta - 1) / delta, m + 3));
    const Instance instance = gen_random_bipartite(n, m, delta, 1, WeightSpec::unit(), seed);
    const int d = degree_profile(instance).max_degree;
    std::vector<double> x(static_cast<size_t>(m));
    for (double& v : x) v = rng.uniform();
    const BadEventSystem system = build_bad_events(
        instance, x, std::vector<char>(static_cast<size_t>(m), 0), 1.0, d, false, 0.4 * d / (d + 1.0));
    EXPECT_LE(system.dependency_degree, d * d);
    if (system.feasibility_count() > 0) {
      EXPECT_GE(system.dependency_degree, 1);
    }
    std::vector<int> owner(static_cast<size_t>(m), 0);
    for (const auto& e : system.events) {
      if (e.kind != BadEvent::Kind::kFeasibility) continue;
      for (int i : e.vars) EXPECT_EQ(++owner[i], 1);
    }
  }
}

TEST(MoserTardosTest, NoEvents) {
  BadEventSystem system;
  system.candidates = {0, 1, 2};
  system.probability = {0.0, 0.0, 0.0};
  system.weight = {1, 1, 1};
  Rng rng(0);
  const MoserTardosResult r = moser_tardos(system, rng);
  EXPECT_EQ(r.resamples, 0);
  EXPECT_EQ(r.assignment, (std::vector<char>{0, 0, 0}));
}

TEST(MoserTardosTest, OutputAvoidsEveryEvent) {
  const BadEventSystem system =
      build_bad_events(eight_cycle(), {0.5, 0.5, 0.5, 0.5}, {0, 0, 0, 0}, 1.0, 2, false, 0.5);
  for (uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const MoserTardosResult r = moser_tardos(system, rng);
    EXPECT_TRUE(system.occurring(r.assignment).empty());
    EXPECT_GE(r.assignment[0] + r.assignment[1], 1);
    EXPECT_GE(r.assignment[2] + r.assignment[3], 1);
  }
}

TEST(MoserTardosTest, ExhaustedBudgetThrows) {
  BadEventSystem system;
  system.candidates = {0};
  system.probability = {0.5};
  system.weight = {1};
  system.events.push_back({BadEvent::Kind::kFeasibility, 0, {0}, 5.0});
  system.dependency = {{}};
  Rng rng(0);
  EXPECT_THROW(moser_tardos(system, rng, 10), SolverError);
}

TEST(LllTest, MatchingPicksOneVertex) {
  const Instance matching = make_instance(3, {{0}, {1}, {2}}, 1);
  const FractionalSolution x = guess_tstar_unweighted(matching);
  Rng rng(0);
  const LllResult r = lll_rounding(matching, x, rng, false);
  EXPECT_GE(r.selection.chosen.size(), 1u);
  EXPECT_EQ(r.selection.value, 1.0);
}

TEST(LllTest, DeskScaleFixesEverything) {
  const Instance instance = gen_random_bipartite(6, 8, 3, 3, WeightSpec::unit(), 4);
  const FractionalSolution x = guess_tstar_unweighted(instance);
  Rng rng(0);
  const LllResult r = lll_rounding(instance, x, rng, false);
  EXPECT_EQ(r.phase, 1);
  EXPECT_EQ(r.fixed.size(), 8u);
  const double opt = brute_force_opt(instance).value;
  EXPECT_LE(r.selection.value, 4.0 * lll_log_factor(r.delta) * (opt + 1.0));
}

// Twelve agents over disjoint blocks of 50 candidates: D = 50 pushes every
// p_v below 1 with the default constant, so the resampling phase runs.
TEST(LllTest, DefaultConstantReachesResampling) {
  std::vector<std::vector<int>> adjacency(12);
  for (int v = 0; v < 600; ++v) adjacency[static_cast<size_t>(v / 50)].push_back(v);
  const Instance instance = make_instance(600, adjacency, 3);
  const FractionalSolution x{std::vector<double>(600, 0.005), 1.0, false};
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    const LllResult r = lll_rounding(instance, x, rng, false);
    EXPECT_EQ(r.delta, 50);
    EXPECT_TRUE(r.fixed.empty());
    EXPECT_EQ(r.phase, 2);
    EXPECT_EQ(r.events, 24);
    EXPECT_GE(static_cast<int>(r.selection.chosen.size()), 3);
    EXPECT_LE(r.selection.value, lll_unweighted_bound(50, 1.0));
  }
}

// x one unit short of the demand: resampling can end one vertex short, and
// the last phase adds the lowest free index.
TEST(LllTest, LastPhaseTopsUpOneShortSelection) {
  const Instance instance = make_instance(4, {{0, 1}, {2, 3}}, 2);
  const FractionalSolution x{{0.5, 0.5, 0.0, 0.0}, 1.0, false};
  int topped_up = 0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const LllResult r = lll_rounding(instance, x, rng, false, {.boost = 0.5});
    EXPECT_GE(static_cast<int>(r.selection.chosen.size()), 2);
    if (r.phase == 3) ++topped_up;
  }
  EXPECT_GT(topped_up, 0);
}

TEST(LllTest, BoundsOnRandomDegreeThree) {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const int m = static_cast<int>(rng.between(2, 12));
    const int n = static_cast<int>(rng.between((m + 2) / 3, m + 2));
    const Instance instance = gen_random_bipartite(n, m, 3, static_cast<int>(rng.between(1, m)),
                                                   WeightSpec::unit(), seed);
    const FractionalSolution x = guess_tstar_unweighted(instance);
    Rng run(seed);
    const LllResult r = lll_rounding(instance, x, run, false);
    EXPECT_GE(static_cast<int>(r.selection.chosen.size()), instance.demand);
    EXPECT_LE(r.selection.value, lll_unweighted_bound(r.delta, brute_force_opt(instance).value));
  }
}

TEST(LllTest, WeightedModeNeedsNormalizedInput) {
  const Instance instance = make_instance(2, {{0, 1}}, 1, {2.0, 3.0});
  Rng rng(0);
  EXPECT_THROW(lll_rounding(instance, {{0.5, 0.5}, 5.0, false}, rng, true), InputError);
  EXPECT_THROW(lll_rounding(instance, {{0.5, 0.5}, 5.0, false}, rng, false), InputError);
}

TEST(TrialsTest, LllAlwaysFeasible) {
  const Instance instance = gen_random_bipartite(5, 9, 3, 4, WeightSpec::unit(), 8);
  const FractionalSolution x = guess_tstar_unweighted(instance);
  const TrialStats stats =
      run_trials(RoundingAlgorithm::kLll, instance, x, seed_range(0, 200), false);
  EXPECT_EQ(stats.trials, 200);
  EXPECT_EQ(stats.feasible_rate, 1.0);
}

TEST(TrialsTest, ContributionIsWeightTimesFrequency) {
  const Instance instance = make_instance(3, {{0, 1}, {2}}, 1, {0.5, 1.0, 0.25});
  const TrialStats stats = run_trials(RoundingAlgorithm::kPipage, instance,
                                      {{0.2, 0.3, 0.5}, 1.0, true}, seed_range(0, 2000));
  for (size_t v = 0; v < 3; ++v) {
    EXPECT_DOUBLE_EQ(stats.contribution[v], instance.weights[v] * stats.frequency[v]);
    EXPECT_GE(stats.frequency[v], 0.0);
    EXPECT_LE(stats.frequency[v], 1.0);
  }
}

}  // namespace
}  // namespace fkss
