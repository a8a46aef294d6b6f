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

#include <cmath>
#include <vector>

#include "fkss/core.hpp"
#include "fkss/exact/brute_force.hpp"
#include "fkss/gen.hpp"
#include "fkss/lp/feasibility.hpp"
#include "fkss/lp/simplex.hpp"
#include "fkss/rng.hpp"

namespace fkss {
namespace {

Instance matching(int n, int k) {
  std::vector<std::vector<int>> adjacency;
  for (int i = 0; i < n; ++i) adjacency.push_back({i});
  return make_instance(n, adjacency, k);
}

TEST(SimplexTest, SmallOptimum) {
  const LpResult r = simplex_maximize({{1, 2}, {3, 1}}, {4, 6}, {1, 1});
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.x[0], 1.6, 1e-12);
  EXPECT_NEAR(r.x[1], 1.2, 1e-12);
  EXPECT_NEAR(r.objective, 2.8, 1e-12);
}

TEST(SimplexTest, Unbounded) {
  EXPECT_EQ(simplex_maximize({{1, -1}}, {1}, {1, 0}).status, LpStatus::kUnbounded);
}

TEST(SimplexTest, DegenerateVertexTerminates) {
  // Three constraints meet at the optimum (1, 1).
  const LpResult r = simplex_maximize({{1, 0}, {0, 1}, {1, 1}, {1, -1}}, {1, 1, 2, 0}, {1, 1});
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, 2.0, 1e-12);
}

TEST(SimplexTest, RejectsNegativeRhs) {
  EXPECT_THROW(simplex_maximize({{1}}, {-1}, {1}), InputError);
}

TEST(CheckFeasibleTest, Examples) {
  const auto spread = check_feasible(matching(5, 1), 1.0);
  ASSERT_TRUE(spread.has_value());
  EXPECT_LE(lp_residuals(matching(5, 1), spread->x, 1.0).worst(), kLpTolerance);

  const Instance gap = gen_gap_instance(2);
  const auto at_one = check_feasible(gap, 1.0);
  ASSERT_TRUE(at_one.has_value());
  EXPECT_LE(lp_residuals(gap, at_one->x, 1.0).worst(), kLpTolerance);

  EXPECT_FALSE(check_feasible(make_instance(2, {{0, 1}}, 2), 1.0).has_value());
}

// Three agents on the pairs of three candidates with k = 2: every agent
// load is x_a + x_b and they sum to 2 * sum x = 4, so the fractional
// optimum is 4/3, reached at x = 2/3.
TEST(CheckFeasibleTest, FractionalThresholdOfTriangle) {
  const Instance triangle = make_instance(3, {{0, 1}, {1, 2}, {0, 2}}, 2);
  EXPECT_TRUE(check_feasible(triangle, 4.0 / 3.0 + 1e-7).has_value());
  EXPECT_FALSE(check_feasible(triangle, 4.0 / 3.0 - 1e-6).has_value());
}

TEST(CheckFeasibleTest, RestrictHeavyRemovesColumns) {
  const Instance instance = make_instance(2, {{0}, {1}}, 2, {1.0, 3.0});
  EXPECT_FALSE(check_feasible(instance, 2.0).has_value());
  const auto loose = check_feasible(instance, 3.0);
  ASSERT_TRUE(loose.has_value());
  const auto one = make_instance(2, {{0}, {1}}, 1, {1.0, 3.0});
  const auto restricted = check_feasible(one, 0.8, {.restrict_heavy = true});
  EXPECT_FALSE(restricted.has_value());
  const auto unrestricted = check_feasible(one, 0.8);
  ASSERT_TRUE(unrestricted.has_value());
}

TEST(CheckFeasibleTest, RejectsNegativeThreshold) {
  EXPECT_THROW(check_feasible(matching(2, 1), -1.0), InputError);
}

TEST(GuessTest, Examples) {
  EXPECT_EQ(guess_tstar_unweighted(gen_gap_instance(2)).t_star, 1.0);
  EXPECT_EQ(guess_tstar_unweighted(gen_gap_instance(3)).t_star, 1.0);
  EXPECT_EQ(guess_tstar_unweighted(make_instance(2, {{0, 1}}, 2)).t_star, 2.0);
  EXPECT_EQ(guess_tstar_unweighted(matching(4, 1)).t_star, 1.0);
  EXPECT_THROW(guess_tstar_unweighted(make_instance(2, {{0, 1}}, 1, {1, 2})), InputError);
}

TEST(DoublingTest, Examples) {
  EXPECT_EQ(doubling(make_instance(1, {{0}}, 1, {4.0})).t_star, 4.0);

  const FractionalSolution zero = doubling(make_instance(3, {{0, 1, 2}}, 2, {0.0, 5.0, 0.0}));
  EXPECT_EQ(zero.t_star, 0.0);
  EXPECT_EQ(zero.x, (std::vector<double>{1.0, 0.0, 1.0}));
}

TEST(DoublingTest, WithinFactorTwoOfUnitGuess) {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    const int m = static_cast<int>(rng.between(2, 12));
    const Instance instance = gen_random_bipartite(static_cast<int>(rng.between((m + 2) / 3, 10)), m, 3,
                                                   static_cast<int>(rng.between(1, m)),
                                                   WeightSpec::unit(), seed);
    const double guess = guess_tstar_unweighted(instance).t_star;
    const double doubled = doubling(instance).t_star;
    EXPECT_LE(doubled, 2.0 * guess);
    EXPECT_LE(guess, 2.0 * doubled);
  }
}

TEST(LowerBoundPropertyTest, RandomSmallInstances) {
  for (uint64_t seed = 0; seed < 150; ++seed) {
    Rng rng(seed + 77);
    const int m = static_cast<int>(rng.between(1, 12));
    const int delta = static_cast<int>(rng.between(1, 4));
    const int n = static_cast<int>(rng.between((m + delta - 1) / delta, m + 2));
    const int k = static_cast<int>(rng.between(1, m));
    const Instance unit = gen_random_bipartite(n, m, delta, k, WeightSpec::unit(), seed);
    const FractionalSolution x = guess_tstar_unweighted(unit);
    EXPECT_LE(x.t_star, brute_force_opt(unit).value);
    EXPECT_LE(lp_residuals(unit, x.x, x.t_star).worst(), kLpTolerance);

    const Instance weighted =
        gen_random_bipartite(n, m, delta, k, WeightSpec::integer(0, 9), seed);
    const FractionalSolution y = doubling(weighted);
    const double opt = brute_force_opt(weighted).value;
    EXPECT_LE(y.t_star, 2.0 * opt);
    EXPECT_LE(lp_residuals(weighted, y.x, y.t_star).worst(), kLpTolerance);
    if (y.t_star > 0.0) {
      EXPECT_FALSE(check_feasible(weighted, y.t_star / 2, {.restrict_heavy = true}).has_value());
    } else {
      EXPECT_EQ(opt, 0.0);
    }
  }
}

TEST(NormalizeTest, Examples) {
  const Instance single = make_instance(1, {{0}}, 1, {4.0});
  const auto [a, xa] = normalize(single, 4.0, FractionalSolution{{1.0}, 4.0, false});
  EXPECT_EQ(a.instance.weights, std::vector<double>{1.0});
  EXPECT_EQ(xa.t_star, 1.0);
  EXPECT_TRUE(xa.normalized);

  const Instance pair = make_instance(2, {{0, 1}}, 1, {2.0, 8.0});
  const auto [b, xb] = normalize(pair, 4.0, FractionalSolution{{1.0, 0.0}, 4.0, false});
  EXPECT_EQ(b.instance.weights, std::vector<double>{0.5});
  EXPECT_EQ(b.removed, std::vector<int>{1});
  EXPECT_EQ(b.original_ids, std::vector<int>{0});
  EXPECT_EQ(xb.x, std::vector<double>{1.0});

  const Instance flat = make_instance(2, {{0, 1}}, 1, {0.5, 1.0});
  const auto [c, xc] = normalize(flat, 1.0, FractionalSolution{{0.5, 0.5}, 1.0, true});
  EXPECT_EQ(c.instance.weights, flat.weights);
  EXPECT_EQ(c.instance.adjacency, flat.adjacency);
  EXPECT_EQ(xc.x, (std::vector<double>{0.5, 0.5}));
}

TEST(NormalizeTest, Errors) {
  const Instance single = make_instance(1, {{0}}, 1, {4.0});
  EXPECT_THROW(normalize(single, 0.0, FractionalSolution{{1.0}, 0.0, false}), InputError);
  EXPECT_THROW(normalize(single, 2.0, FractionalSolution{{1.0}, 2.0, false}), InputError);
}

TEST(NormalizeTest, RoundTripPreservesObjective) {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const int m = static_cast<int>(rng.between(2, 10));
    const Instance instance = gen_random_bipartite(static_cast<int>(rng.between((m + 2) / 3, 8)),
                                                   m, 3, 1, WeightSpec::real(0.1, 9.0), seed);
    const FractionalSolution x = doubling(instance);
    ASSERT_GT(x.t_star, 0.0);
    const auto [norm, point] = normalize(instance, x.t_star, x);
    for (double w : norm.instance.weights) EXPECT_LE(w, 1.0);
    std::vector<int> subset;
    for (int v = 0; v < norm.instance.n_candidates; ++v) {
      if (rng.bernoulli(0.5)) subset.push_back(v);
    }
    const double scaled = norm.denormalize(max_disagreement(norm.instance, subset));
    const double direct = max_disagreement(instance, norm.to_original(subset));
    EXPECT_NEAR(scaled, direct, 1e-12 * std::max(1.0, direct));
  }
}

TEST(TrimTest, Examples) {
  EXPECT_EQ(trim_to_demand({{1.0, 0.6}, 1.0, false}, 1).x, (std::vector<double>{1.0, 0.0}));
  EXPECT_EQ(trim_to_demand({{0.5, 0.5, 0.5}, 1.0, false}, 1).x,
            (std::vector<double>{0.5, 0.5, 0.0}));
  EXPECT_EQ(trim_to_demand({{0.5, 0.5}, 1.0, false}, 1).x, (std::vector<double>{0.5, 0.5}));
  EXPECT_THROW(trim_to_demand({{0.2, 0.2}, 1.0, false}, 1), InputError);
}

}  // namespace
}  // namespace fkss
