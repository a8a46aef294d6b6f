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
#include <string>
#include <vector>

#include "fkss/core.hpp"
#include "fkss/exact/brute_force.hpp"
#include "fkss/gen.hpp"
#include "fkss/rng.hpp"
#include "support/oracle.hpp"

namespace fkss {
namespace {

bool mentions(const std::vector<std::string>& errors, const std::string& needle) {
  return std::any_of(errors.begin(), errors.end(),
                     [&](const std::string& e) { return e.find(needle) != std::string::npos; });
}

TEST(ValidateTest, AcceptsWellFormedInstance) {
  EXPECT_TRUE(validate(make_instance(2, {{0}, {0, 1}}, 1)).empty());
}

TEST(ValidateTest, ReportsOutOfRangeIndex) {
  EXPECT_TRUE(mentions(validate(make_instance(2, {{0, 2}}, 1)), "index out of range"));
}

TEST(ValidateTest, ReportsNegativeWeight) {
  EXPECT_TRUE(mentions(validate(make_instance(2, {{0, 1}}, 1, {-1.0, 1.0})), "negative weight"));
}

TEST(ValidateTest, ReportsDuplicatesAndDemand) {
  Instance bad = make_instance(2, {{0, 0}}, 3);
  const auto errors = validate(bad);
  EXPECT_TRUE(mentions(errors, "duplicate"));
  EXPECT_TRUE(mentions(errors, "exceeds candidate count"));
  bad.demand = 0;
  EXPECT_TRUE(mentions(validate(bad), "demand must be >= 1"));
}

TEST(ValidateTest, ReportsShapeMismatches) {
  Instance bad = make_instance(2, {{0}}, 1);
  bad.weights.pop_back();
  bad.adjacency.push_back({1});
  const auto errors = validate(bad);
  EXPECT_TRUE(mentions(errors, "weights has 1 entries"));
  EXPECT_TRUE(mentions(errors, "adjacency has 2 rows"));
}

TEST(MaxDisagreementTest, SumsChosenNeighbours) {
  EXPECT_EQ(max_disagreement(make_instance(2, {{0, 1}}, 1), {0, 1}), 2.0);
  EXPECT_EQ(max_disagreement(make_instance(2, {{0, 1}}, 1, {0.5, 2.0}), {1}), 2.0);
}

TEST(MaxDisagreementTest, GapInstanceWithTwoChosen) {
  const Instance gap = gen_gap_instance(2);
  // Agents are the lexicographic pairs; {0,2} is the only one holding both.
  EXPECT_EQ(max_disagreement(gap, {0, 2}), 2.0);
  int twice = 0;
  for (const auto& row : gap.adjacency) {
    const auto hits = std::count_if(row.begin(), row.end(), [](int v) { return v == 0 || v == 2; });
    if (hits == 2) ++twice;
    EXPECT_LE(hits, 2);
  }
  EXPECT_EQ(twice, 1);
}

TEST(MaxDisagreementTest, EmptyCases) {
  EXPECT_EQ(max_disagreement(make_instance(3, {}, 1), {0, 1}), 0.0);
  EXPECT_EQ(max_disagreement(make_instance(3, {{0, 1, 2}}, 1), {}), 0.0);
}

TEST(MaxDisagreementTest, RejectsBadIds) {
  const Instance instance = make_instance(2, {{0, 1}}, 1);
  EXPECT_THROW(max_disagreement(instance, {2}), InputError);
  EXPECT_THROW(max_disagreement(instance, {-1}), InputError);
  EXPECT_THROW(max_disagreement(instance, {1, 1}), InputError);
}

TEST(DegreeProfileTest, Matching) {
  EXPECT_EQ(degree_profile(make_instance(3, {{0}, {1}, {2}}, 1)).max_degree, 1);
}

TEST(DegreeProfileTest, GapInstance) {
  const DegreeProfile p = degree_profile(gen_gap_instance(2));
  EXPECT_EQ(p.max_agent_degree, 2);
  EXPECT_EQ(p.max_candidate_degree, 3);
  EXPECT_EQ(p.max_degree, 3);
}

TEST(DegreeProfileTest, Star) {
  const DegreeProfile p = degree_profile(make_instance(5, {{0, 1, 2, 3, 4}}, 1));
  EXPECT_EQ(p.max_degree, 5);
  EXPECT_EQ(p.max_candidate_degree, 1);
}

TEST(PreprocessTest, DropsIsolatedCandidate) {
  const Instance instance = make_instance(2, {{0}}, 2);
  const Preprocessed pre = preprocess(instance);
  EXPECT_EQ(pre.instance.n_candidates, 1);
  EXPECT_EQ(pre.instance.demand, 1);
  EXPECT_EQ(pre.removed, std::vector<int>{1});
  const Selection lifted = pre.lift(instance, make_selection(pre.instance, {0}));
  EXPECT_EQ(lifted.chosen, (std::vector<int>{0, 1}));
  EXPECT_EQ(lifted.value, 1.0);
}

TEST(PreprocessTest, FixedPointWithoutIsolatedCandidates) {
  const Instance instance = make_instance(2, {{0, 1}, {1}}, 2, {1.0, 3.0});
  const Preprocessed pre = preprocess(instance);
  EXPECT_EQ(pre.instance.adjacency, instance.adjacency);
  EXPECT_EQ(pre.instance.weights, instance.weights);
  EXPECT_EQ(pre.instance.demand, 2);
  EXPECT_TRUE(pre.removed.empty());
}

TEST(PreprocessTest, AllIsolated) {
  const Instance instance = make_instance(3, {{}, {}}, 3);
  const Preprocessed pre = preprocess(instance);
  EXPECT_EQ(pre.instance.demand, 0);
  const Selection lifted = pre.lift(instance, Selection{});
  EXPECT_EQ(lifted.chosen, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(lifted.value, 0.0);
}

// Monotonicity, scaling, idempotence and optimum preservation on random
// small instances.
TEST(CorePropertyTest, RandomInstances) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = static_cast<int>(rng.between(1, 10));
    const int n = static_cast<int>(rng.between(1, 6));
    std::vector<std::vector<int>> adjacency(static_cast<size_t>(n));
    for (auto& row : adjacency) {
      for (int v = 0; v < m; ++v) {
        if (rng.bernoulli(0.3)) row.push_back(v);
      }
    }
    std::vector<double> weights;
    for (int v = 0; v < m; ++v) weights.push_back(static_cast<double>(rng.between(0, 5)));
    const int k = static_cast<int>(rng.between(1, m));
    const Instance instance = make_instance(m, adjacency, k, weights);
    ASSERT_TRUE(validate(instance).empty());

    std::vector<int> small, large;
    for (int v = 0; v < m; ++v) {
      const bool in_large = rng.bernoulli(0.6);
      if (in_large) large.push_back(v);
      if (in_large && rng.bernoulli(0.5)) small.push_back(v);
    }
    EXPECT_LE(max_disagreement(instance, small), max_disagreement(instance, large));

    Instance scaled = instance;
    for (double& w : scaled.weights) w *= 2.5;
    EXPECT_DOUBLE_EQ(max_disagreement(scaled, large), 2.5 * max_disagreement(instance, large));

    const Preprocessed once = preprocess(instance);
    const Preprocessed twice = preprocess(once.instance);
    EXPECT_EQ(twice.instance.adjacency, once.instance.adjacency);
    EXPECT_EQ(twice.instance.demand, once.instance.demand);
    EXPECT_TRUE(twice.removed.empty());

    const double expected = oracle::opt(instance);
    if (once.instance.demand == 0) {
      EXPECT_EQ(expected, 0.0);
      EXPECT_EQ(once.lift(instance, Selection{}).value, 0.0);
    } else {
      const Selection reduced = brute_force_opt(once.instance);
      const Selection lifted = once.lift(instance, reduced);
      EXPECT_EQ(lifted.value, expected);
      EXPECT_EQ(static_cast<int>(lifted.chosen.size()), k);
    }
  }
}

TEST(BruteForceTest, Examples) {
  EXPECT_EQ(brute_force_opt(make_instance(4, {{0}, {1}, {2}, {3}}, 1)).value, 1.0);
  EXPECT_EQ(brute_force_opt(gen_gap_instance(2)).value, 2.0);
  EXPECT_EQ(brute_force_opt(make_instance(3, {{0, 1, 2}}, 2)).value, 2.0);
}

TEST(BruteForceTest, LexicographicTieBreak) {
  // Every pair of the gap instance is optimal, so the first pair wins.
  EXPECT_EQ(brute_force_opt(gen_gap_instance(2)).chosen, (std::vector<int>{0, 1}));
  EXPECT_EQ(brute_force_opt(gen_gap_instance(2), false).chosen, (std::vector<int>{0, 1}));
}

TEST(BruteForceTest, RejectsLargeInstances) {
  EXPECT_THROW(brute_force_opt(make_instance(23, {{0}}, 1)), SolverError);
}

TEST(BruteForceTest, AtLeastKMatchesExactlyK) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = static_cast<int>(rng.between(2, 9));
    const int n = static_cast<int>(rng.between(std::max(2, (m + 2) / 3), 6));
    const Instance instance =
        gen_random_bipartite(n, m, 3, 1, WeightSpec::integer(0, 4), 100 + static_cast<uint64_t>(trial));
    for (int k = 1; k <= instance.n_candidates; ++k) {
      Instance at_k = instance;
      at_k.demand = k;
      const Selection exact = brute_force_opt(at_k, true);
      const Selection loose = brute_force_opt(at_k, false);
      EXPECT_EQ(exact.value, loose.value);
      EXPECT_EQ(exact.value, oracle::opt(at_k, true));
      EXPECT_EQ(loose.value, oracle::opt(at_k, false));
      EXPECT_EQ(max_disagreement(at_k, exact.chosen), exact.value);
    }
  }
}

TEST(RngTest, ReproducibleAndInRange) {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    const double x = a.uniform();
    EXPECT_EQ(x, b.uniform());
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
    const auto y = a.between(-3, 3);
    EXPECT_EQ(y, b.between(-3, 3));
    EXPECT_GE(y, -3);
    EXPECT_LE(y, 3);
  }
}

}  // namespace
}  // namespace fkss
