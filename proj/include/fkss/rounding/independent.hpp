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

// Independent rounding with a boosted inclusion probability. Large
// coordinates are kept outright; the rest are scaled by s(n) and flipped
// independently. The result may fall short of the demand.

#ifndef FKSS_ROUNDING_INDEPENDENT_HPP_
#define FKSS_ROUNDING_INDEPENDENT_HPP_

#include <algorithm>
#include <cmath>
#include <vector>

#include "fkss/core.hpp"
#include "fkss/lp/feasibility.hpp"
#include "fkss/rng.hpp"

namespace fkss {

inline constexpr int kIndependentMinAgents = 16;

// s(n) = 10 ln n / ln ln n.
inline double independent_boost(int n) {
  const double ln = std::log(static_cast<double>(n));
  return 10.0 * ln / std::log(ln);
}

// Coordinates at or above ln ln n / (10 ln n) are always kept.
inline double independent_cutoff(int n) {
  const double ln = std::log(static_cast<double>(n));
  return std::log(ln) / (10.0 * ln);
}

// Per-candidate inclusion probability; 1 for the kept set. Excludes the
// "small mass" case where a single low-index vertex is taken instead.
inline std::vector<double> independent_probabilities(int n, const std::vector<double>& x) {
  const double cutoff = independent_cutoff(n);
  const double boost = independent_boost(n);
  std::vector<double> p(x.size());
  for (size_t v = 0; v < x.size(); ++v) {
    p[v] = x[v] >= cutoff ? 1.0 : std::min(1.0, boost * x[v]);
  }
  return p;
}

inline Selection independent_rounding(const Instance& instance, const FractionalSolution& x,
                                      Rng& rng) {
  require_valid(instance);
  const int n = instance.n_agents;
  if (n < kIndependentMinAgents) {
    throw InputError("independent rounding needs at least 16 agents; use pipage");
  }
  if (x.x.size() != static_cast<size_t>(instance.n_candidates)) {
    throw InputError("fractional solution size mismatch");
  }
  const double cutoff = independent_cutoff(n);
  const double boost = independent_boost(n);
  std::vector<int> chosen;
  std::vector<int> rest;
  double rest_mass = 0.0;
  for (int v = 0; v < instance.n_candidates; ++v) {
    if (x.x[v] >= cutoff) {
      chosen.push_back(v);
    } else {
      rest.push_back(v);
      rest_mass += x.x[v];
    }
  }
  if (rest_mass <= 1.0) {
    if (!rest.empty()) chosen.push_back(rest.front());
  } else {
    for (int v : rest) {
      if (rng.bernoulli(boost * x.x[v])) chosen.push_back(v);
    }
  }
  return make_selection(instance, std::move(chosen));
}

}  // namespace fkss

#endif  // FKSS_ROUNDING_INDEPENDENT_HPP_
