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

// Exhaustive optimum, used as the reference for every other solver.

#ifndef FKSS_EXACT_BRUTE_FORCE_HPP_
#define FKSS_EXACT_BRUTE_FORCE_HPP_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "fkss/core.hpp"

namespace fkss {

inline constexpr int kOracleMaxCandidates = 22;

namespace internal {

// Charges of `chosen`, abandoning as soon as some agent reaches `cutoff`.
// Returns +inf when cut off.
inline double capped_value(const std::vector<std::vector<int>>& agents_of,
                           const std::vector<double>& weights,
                           const std::vector<int>& chosen, std::vector<double>& load,
                           double cutoff) {
  std::fill(load.begin(), load.end(), 0.0);
  double worst = 0.0;
  for (int v : chosen) {
    for (int u : agents_of[v]) {
      load[u] += weights[v];
      if (load[u] >= cutoff) return std::numeric_limits<double>::infinity();
      worst = std::max(worst, load[u]);
    }
  }
  return worst;
}

}  // namespace internal

// Minimises the max disagreement over all k-subsets (exact_k) or over all
// subsets of size >= k. Ties go to the lexicographically smallest id list.
inline Selection brute_force_opt(const Instance& instance, bool exact_k = true,
                                 int cap = kOracleMaxCandidates) {
  const int m = instance.n_candidates;
  const int k = std::max(instance.demand, 0);
  if (m > cap) {
    throw SolverError("instance too large for oracle (m=" + std::to_string(m) +
                      ", cap=" + std::to_string(cap) + ")");
  }
  if (k > m) throw InputError("demand exceeds candidate count");
  const auto agents_of = candidate_neighbors(instance);
  std::vector<double> load(static_cast<size_t>(instance.n_agents), 0.0);
  const double inf = std::numeric_limits<double>::infinity();

  Selection best;
  best.value = inf;
  if (exact_k) {
    std::vector<int> combo(static_cast<size_t>(k));
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
      const double value =
          internal::capped_value(agents_of, instance.weights, combo, load, best.value);
      if (value < best.value) {
        best.value = value;
        best.chosen = combo;
      }
      // Next combination in lexicographic order.
      int i = k - 1;
      while (i >= 0 && combo[i] == m - k + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
    return best;
  }

  std::vector<int> chosen;
  for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) < k) continue;
    chosen.clear();
    for (int v = 0; v < m; ++v) {
      if (mask >> v & 1) chosen.push_back(v);
    }
    // Equal values must still be compared lexicographically, so the cutoff
    // is only strict when nothing has been found yet.
    const double value = internal::capped_value(
        agents_of, instance.weights, chosen, load,
        best.value == inf ? inf : std::nextafter(best.value, inf));
    if (value < best.value ||
        (value == best.value && chosen < best.chosen)) {
      best.value = value;
      best.chosen = chosen;
    }
  }
  return best;
}

}  // namespace fkss

#endif  // FKSS_EXACT_BRUTE_FORCE_HPP_
