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

// Rounding through the algorithmic local lemma.
//
// Every candidate gets probability p_v = (x_v + 1/D) * c with c = 4 ln(2eD^2)
// and D the maximum degree. Candidates with p_v >= 1 are taken outright. The
// rest become independent coins; two families of bad events are avoided by
// Moser-Tardos resampling:
//   - an agent collecting too much weight among its remaining neighbours,
//   - a block of D consecutive remaining candidates collecting less than its
//     fractional mass.
// A final step adds one more candidate if the demand is still one short.

#ifndef FKSS_ROUNDING_LLL_HPP_
#define FKSS_ROUNDING_LLL_HPP_

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "fkss/core.hpp"
#include "fkss/lp/feasibility.hpp"
#include "fkss/rng.hpp"

namespace fkss {

// ln(2 e D^2).
inline double lll_log_factor(int delta) {
  const double d = static_cast<double>(delta);
  return std::log(2.0 * std::numbers::e * d * d);
}

inline double lll_default_boost(int delta) { return 4.0 * lll_log_factor(delta); }

// Proven upper bounds on the rounded objective.
inline double lll_unweighted_bound(int delta, double opt) {
  return 12.0 * lll_log_factor(delta) * (opt + 2.0);
}
inline double lll_weighted_bound(int delta, double opt) {
  return 12.0 * lll_log_factor(delta) * (3.0 * opt + 1.0);
}
// Same bound in original units when the instance was normalized by t_star.
inline double lll_weighted_bound_scaled(int delta, double opt, double t_star) {
  return 12.0 * lll_log_factor(delta) * (3.0 * opt + t_star);
}

struct BadEvent {
  enum class Kind { kPerformance, kFeasibility };
  Kind kind = Kind::kPerformance;
  int owner = 0;          // agent id or block number
  std::vector<int> vars;  // indices into BadEventSystem::candidates
  double threshold = 0.0;
};

struct BadEventSystem {
  int delta = 0;
  double boost = 0.0;
  std::vector<int> candidates;      // variable -> candidate id
  std::vector<double> probability;  // variable -> p_v
  std::vector<double> weight;       // variable -> weight counted by performance events
  std::vector<BadEvent> events;     // performance events first, then feasibility
  std::vector<std::vector<int>> dependency;
  int dependency_degree = 0;

  int performance_count() const {
    return static_cast<int>(std::count_if(events.begin(), events.end(), [](const BadEvent& e) {
      return e.kind == BadEvent::Kind::kPerformance;
    }));
  }
  int feasibility_count() const {
    return static_cast<int>(events.size()) - performance_count();
  }

  bool occurs(size_t event, const std::vector<char>& assignment) const {
    const BadEvent& e = events[event];
    double total = 0.0;
    for (int i : e.vars) {
      if (assignment[i]) total += e.kind == BadEvent::Kind::kPerformance ? weight[i] : 1.0;
    }
    if (e.kind == BadEvent::Kind::kPerformance) return total >= e.threshold;
    return total < e.threshold - kLpTolerance;
  }

  std::vector<int> occurring(const std::vector<char>& assignment) const {
    std::vector<int> out;
    for (size_t i = 0; i < events.size(); ++i) {
      if (occurs(i, assignment)) out.push_back(static_cast<int>(i));
    }
    return out;
  }
};

// Events over the candidates not in `fixed`. `boost` <= 0 selects the
// default 4 ln(2eD^2). Every remaining candidate must have p_v < 1.
inline BadEventSystem build_bad_events(const Instance& instance, const std::vector<double>& x,
                                       const std::vector<char>& fixed, double t_star,
                                       int delta, bool weighted, double boost = 0.0) {
  if (delta < 1) throw InputError("maximum degree must be >= 1");
  if (x.size() != static_cast<size_t>(instance.n_candidates) ||
      fixed.size() != x.size()) {
    throw InputError("fractional solution size mismatch");
  }
  BadEventSystem system;
  system.delta = delta;
  system.boost = boost > 0.0 ? boost : lll_default_boost(delta);
  const double inv_delta = 1.0 / delta;

  std::vector<int> var_of(x.size(), -1);
  for (int v = 0; v < instance.n_candidates; ++v) {
    if (fixed[v]) continue;
    const double p = (x[v] + inv_delta) * system.boost;
    if (p >= 1.0) {
      throw InputError("candidate " + std::to_string(v) +
                       " has p >= 1 and belongs to the fixed set");
    }
    var_of[v] = static_cast<int>(system.candidates.size());
    system.candidates.push_back(v);
    system.probability.push_back(p);
    system.weight.push_back(weighted ? instance.weights[v] : 1.0);
  }

  const double limit = 8.0 * lll_log_factor(delta) * (t_star + 1.0);
  for (int u = 0; u < instance.n_agents; ++u) {
    BadEvent event;
    event.owner = u;
    event.threshold = limit;
    for (int v : instance.adjacency[u]) {
      if (var_of[v] >= 0) event.vars.push_back(var_of[v]);
    }
    if (!event.vars.empty()) system.events.push_back(std::move(event));
  }

  const size_t residual = system.candidates.size();
  const auto block = static_cast<size_t>(delta);
  for (size_t start = 0, j = 0; start < residual; start += block, ++j) {
    BadEvent event;
    event.kind = BadEvent::Kind::kFeasibility;
    event.owner = static_cast<int>(j);
    double slack = 0.0;
    double mass = 0.0;
    for (size_t i = start; i < std::min(residual, start + block); ++i) {
      event.vars.push_back(static_cast<int>(i));
      const double xv = x[system.candidates[i]];
      mass += xv;
      slack += xv + inv_delta;
    }
    event.threshold = mass;
    if (slack >= 1.0) system.events.push_back(std::move(event));
  }

  std::vector<std::vector<int>> events_of(residual);
  for (size_t e = 0; e < system.events.size(); ++e) {
    for (int i : system.events[e].vars) events_of[i].push_back(static_cast<int>(e));
  }
  system.dependency.assign(system.events.size(), {});
  for (size_t e = 0; e < system.events.size(); ++e) {
    auto& adj = system.dependency[e];
    for (int i : system.events[e].vars) {
      for (int f : events_of[i]) {
        if (f != static_cast<int>(e)) adj.push_back(f);
      }
    }
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    system.dependency_degree = std::max(system.dependency_degree, static_cast<int>(adj.size()));
  }
  return system;
}

inline long moser_tardos_default_budget(const BadEventSystem& system) {
  const double d = std::max(system.dependency_degree, 1);
  return static_cast<long>(
      std::ceil(1000.0 * (1.0 + 1.0 / d) * static_cast<double>(system.events.size())));
}

struct MoserTardosResult {
  std::vector<char> assignment;  // per variable
  long resamples = 0;
};

// Samples every variable, then keeps resampling the variables of the
// lowest-index occurring event. `max_resamples` < 0 selects the default.
inline MoserTardosResult moser_tardos(const BadEventSystem& system, Rng& rng,
                                      long max_resamples = -1) {
  if (max_resamples < 0) max_resamples = moser_tardos_default_budget(system);
  MoserTardosResult result;
  result.assignment.resize(system.candidates.size());
  for (size_t i = 0; i < system.candidates.size(); ++i) {
    result.assignment[i] = rng.bernoulli(system.probability[i]) ? 1 : 0;
  }
  while (true) {
    size_t hit = system.events.size();
    for (size_t e = 0; e < system.events.size(); ++e) {
      if (system.occurs(e, result.assignment)) {
        hit = e;
        break;
      }
    }
    if (hit == system.events.size()) return result;
    if (result.resamples >= max_resamples) {
      std::ostringstream out;
      out << "moser-tardos: budget of " << max_resamples << " resamples exhausted ("
          << system.events.size() << " events, d=" << system.dependency_degree
          << ", event " << hit << " still occurring)";
      throw SolverError(out.str());
    }
    for (int i : system.events[hit].vars) {
      result.assignment[i] = rng.bernoulli(system.probability[i]) ? 1 : 0;
    }
    ++result.resamples;
  }
}

struct LllOptions {
  double boost = 0.0;  // <= 0: 4 ln(2eD^2)
  long max_resamples = -1;
};

struct LllResult {
  Selection selection;
  int phase = 1;  // phase that completed the demand
  int delta = 0;
  double boost = 0.0;
  std::vector<int> fixed;  // taken because p_v = 1
  std::vector<int> local;  // chosen by resampling
  int events = 0;
  int dependency_degree = 0;
  long resamples = 0;
};

// Weighted mode expects a normalized instance (T* = 1, weights in [0, 1]).
inline LllResult lll_rounding(const Instance& instance, const FractionalSolution& x, Rng& rng,
                              bool weighted, LllOptions options = {}) {
  require_valid(instance);
  if (x.x.size() != static_cast<size_t>(instance.n_candidates)) {
    throw InputError("fractional solution size mismatch");
  }
  if (weighted) {
    if (!x.normalized || x.t_star != 1.0) throw InputError("weighted mode needs normalized input");
    for (double w : instance.weights) {
      if (w > 1.0 + kLpTolerance) throw InputError("weighted mode needs weights <= 1");
    }
  } else if (!instance.unit_weights()) {
    throw InputError("unit weights required (use weighted mode)");
  }
  LllResult result;
  result.delta = degree_profile(instance).max_degree;
  if (result.delta < 1) throw InputError("instance has no edges; preprocess first");
  result.boost = options.boost > 0.0 ? options.boost : lll_default_boost(result.delta);
  const double inv_delta = 1.0 / result.delta;
  const int k = instance.demand;

  std::vector<char> taken(static_cast<size_t>(instance.n_candidates), 0);
  for (int v = 0; v < instance.n_candidates; ++v) {
    if ((x.x[v] + inv_delta) * result.boost >= 1.0) {
      taken[v] = 1;
      result.fixed.push_back(v);
    }
  }
  std::vector<int> chosen = result.fixed;
  if (static_cast<int>(chosen.size()) >= k) {
    result.selection = make_selection(instance, std::move(chosen));
    return result;
  }

  const BadEventSystem system = build_bad_events(instance, x.x, taken, x.t_star, result.delta,
                                                 weighted, result.boost);
  result.events = static_cast<int>(system.events.size());
  result.dependency_degree = system.dependency_degree;
  const MoserTardosResult mt = moser_tardos(system, rng, options.max_resamples);
  result.resamples = mt.resamples;
  for (size_t i = 0; i < mt.assignment.size(); ++i) {
    if (mt.assignment[i]) {
      const int v = system.candidates[i];
      taken[v] = 1;
      result.local.push_back(v);
      chosen.push_back(v);
    }
  }
  result.phase = 2;
  if (static_cast<int>(chosen.size()) < k) {
    result.phase = 3;
    for (int v = 0; v < instance.n_candidates; ++v) {
      if (!taken[v]) {
        chosen.push_back(v);
        break;
      }
    }
  }
  if (static_cast<int>(chosen.size()) < k) {
    throw SolverError("lll: selection of " + std::to_string(chosen.size()) +
                      " falls short of the demand " + std::to_string(k));
  }
  result.selection = make_selection(instance, std::move(chosen));
  return result;
}

}  // namespace fkss

#endif  // FKSS_ROUNDING_LLL_HPP_
