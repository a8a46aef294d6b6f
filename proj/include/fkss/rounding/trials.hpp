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

// Repeated seeded runs of a rounding algorithm with empirical statistics.

#ifndef FKSS_ROUNDING_TRIALS_HPP_
#define FKSS_ROUNDING_TRIALS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fkss/core.hpp"
#include "fkss/lp/feasibility.hpp"
#include "fkss/rng.hpp"
#include "fkss/rounding/independent.hpp"
#include "fkss/rounding/lll.hpp"
#include "fkss/rounding/pipage.hpp"

namespace fkss {

enum class RoundingAlgorithm { kIndependent, kPipage, kLll };

inline std::string to_string(RoundingAlgorithm alg) {
  switch (alg) {
    case RoundingAlgorithm::kIndependent: return "independent";
    case RoundingAlgorithm::kPipage: return "pipage";
    case RoundingAlgorithm::kLll: return "lll";
  }
  return "?";
}

inline std::optional<RoundingAlgorithm> parse_rounding(const std::string& name) {
  if (name == "independent") return RoundingAlgorithm::kIndependent;
  if (name == "pipage") return RoundingAlgorithm::kPipage;
  if (name == "lll") return RoundingAlgorithm::kLll;
  return std::nullopt;
}

struct TrialStats {
  long trials = 0;
  std::vector<double> frequency;           // Pr[v in S]
  std::vector<std::vector<double>> joint;  // Pr[u in S and v in S], empty if not tracked
  std::vector<double> contribution;        // E[w_v X_v]
  double feasible_rate = 0.0;              // fraction of runs with |S| >= k
  std::vector<double> values;              // max disagreement per run
};

// One run per seed. Pipage trims x to the demand first. Weighted LLL expects
// the normalized instance and point.
inline TrialStats run_trials(RoundingAlgorithm alg, const Instance& instance,
                             const FractionalSolution& x, const std::vector<uint64_t>& seeds,
                             bool weighted = false, bool track_pairs = true,
                             LllOptions lll_options = {}) {
  require_valid(instance);
  const auto m = static_cast<size_t>(instance.n_candidates);
  TrialStats stats;
  stats.frequency.assign(m, 0.0);
  stats.contribution.assign(m, 0.0);
  if (track_pairs) stats.joint.assign(m, std::vector<double>(m, 0.0));
  stats.values.reserve(seeds.size());
  const FractionalSolution trimmed =
      alg == RoundingAlgorithm::kPipage ? trim_to_demand(x, instance.demand) : x;

  long feasible = 0;
  for (uint64_t seed : seeds) {
    Rng rng(seed);
    Selection selection;
    switch (alg) {
      case RoundingAlgorithm::kIndependent:
        selection = independent_rounding(instance, x, rng);
        break;
      case RoundingAlgorithm::kPipage:
        selection = make_selection(instance, pipage_rounding(trimmed.x, instance.demand, rng));
        break;
      case RoundingAlgorithm::kLll:
        selection = lll_rounding(instance, x, rng, weighted, lll_options).selection;
        break;
    }
    ++stats.trials;
    if (static_cast<int>(selection.chosen.size()) >= instance.demand) ++feasible;
    stats.values.push_back(selection.value);
    for (size_t a = 0; a < selection.chosen.size(); ++a) {
      const int v = selection.chosen[a];
      stats.frequency[v] += 1.0;
      stats.contribution[v] += instance.weights[v];
      if (!track_pairs) continue;
      for (size_t b = a + 1; b < selection.chosen.size(); ++b) {
        const int u = selection.chosen[b];
        stats.joint[v][u] += 1.0;
        stats.joint[u][v] += 1.0;
      }
    }
  }
  if (stats.trials > 0) {
    const double n = static_cast<double>(stats.trials);
    for (size_t v = 0; v < m; ++v) {
      stats.frequency[v] /= n;
      stats.contribution[v] /= n;
      if (track_pairs) {
        for (double& j : stats.joint[v]) j /= n;
      }
    }
    stats.feasible_rate = static_cast<double>(feasible) / n;
  }
  return stats;
}

// Seeds base, base+1, ..., base+count-1.
inline std::vector<uint64_t> seed_range(uint64_t base, long count) {
  std::vector<uint64_t> seeds;
  seeds.reserve(static_cast<size_t>(count));
  for (long i = 0; i < count; ++i) seeds.push_back(base + static_cast<uint64_t>(i));
  return seeds;
}

}  // namespace fkss

#endif  // FKSS_ROUNDING_TRIALS_HPP_
