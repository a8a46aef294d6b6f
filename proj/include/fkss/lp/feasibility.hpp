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

// Fractional relaxation at a threshold t:
//
//   sum_{v in N(u)} w_v x_v <= t  for every agent u,
//   sum_v x_v >= k,  0 <= x_v <= 1.
//
// Solved as "maximise sum x" over the load and box rows; the relaxation is
// feasible exactly when that maximum reaches k.

#ifndef FKSS_LP_FEASIBILITY_HPP_
#define FKSS_LP_FEASIBILITY_HPP_

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fkss/core.hpp"
#include "fkss/lp/simplex.hpp"

namespace fkss {

inline constexpr double kLpTolerance = 1e-9;

struct FractionalSolution {
  std::vector<double> x;
  double t_star = 0.0;
  bool normalized = false;

  double sum() const {
    double total = 0.0;
    for (double v : x) total += v;
    return total;
  }
};

// Worst violation of each constraint family; all zero for an exact point.
struct LpResiduals {
  double load = 0.0;    // max_u (load_u - t)
  double demand = 0.0;  // k - sum x
  double box = 0.0;     // distance of x outside [0, 1]

  double worst() const { return std::max({load, demand, box}); }
};

inline LpResiduals lp_residuals(const Instance& instance, const std::vector<double>& x,
                                double t) {
  LpResiduals r;
  double total = 0.0;
  for (double v : x) {
    r.box = std::max({r.box, -v, v - 1.0});
    total += v;
  }
  r.demand = std::max(0.0, instance.demand - total);
  for (const auto& row : instance.adjacency) {
    double load = 0.0;
    for (int v : row) load += instance.weights[v] * x[v];
    r.load = std::max(r.load, load - t);
  }
  return r;
}

struct FeasibilityOptions {
  // Fix x_v = 0 for every candidate heavier than t.
  bool restrict_heavy = false;
};

// A feasible point of the relaxation at threshold t, or nullopt.
inline std::optional<FractionalSolution> check_feasible(const Instance& instance, double t,
                                                        FeasibilityOptions options = {}) {
  require_valid(instance);
  if (!(t >= 0.0)) throw InputError("threshold must be >= 0");
  const int m = instance.n_candidates;

  // Columns are the candidates still allowed to be fractional.
  std::vector<int> columns;
  for (int v = 0; v < m; ++v) {
    if (!(options.restrict_heavy && instance.weights[v] > t)) columns.push_back(v);
  }
  if (static_cast<int>(columns.size()) < instance.demand) return std::nullopt;
  std::vector<int> column_of(static_cast<size_t>(m), -1);
  for (size_t j = 0; j < columns.size(); ++j) column_of[columns[j]] = static_cast<int>(j);

  const size_t cols = columns.size();
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  for (const auto& row : instance.adjacency) {
    std::vector<double> line(cols, 0.0);
    bool any = false;
    for (int v : row) {
      if (column_of[v] >= 0 && instance.weights[v] > 0.0) {
        line[static_cast<size_t>(column_of[v])] = instance.weights[v];
        any = true;
      }
    }
    if (any) {
      a.push_back(std::move(line));
      b.push_back(t);
    }
  }
  for (size_t j = 0; j < cols; ++j) {
    std::vector<double> line(cols, 0.0);
    line[j] = 1.0;
    a.push_back(std::move(line));
    b.push_back(1.0);
  }
  const LpResult lp = simplex_maximize(a, b, std::vector<double>(cols, 1.0));
  if (lp.status != LpStatus::kOptimal) throw SolverError("relaxation reported unbounded");
  if (lp.objective < instance.demand - kLpTolerance) return std::nullopt;

  FractionalSolution solution;
  solution.t_star = t;
  solution.x.assign(static_cast<size_t>(m), 0.0);
  for (size_t j = 0; j < cols; ++j) {
    solution.x[columns[j]] = std::clamp(lp.x[j], 0.0, 1.0);
  }
  const LpResiduals r = lp_residuals(instance, solution.x, t);
  if (r.worst() > kLpTolerance) {
    std::ostringstream out;
    out << "relaxation point violates constraints: load " << r.load << ", demand "
        << r.demand << ", box " << r.box;
    throw SolverError(out.str());
  }
  return solution;
}

// Smallest integer T in [1, k] with a feasible relaxation. A lower bound on
// the integral optimum of a unit-weight instance.
inline FractionalSolution guess_tstar_unweighted(const Instance& instance) {
  require_valid(instance);
  if (!instance.unit_weights()) throw InputError("unit weights required");
  int lo = 1;
  int hi = instance.demand;
  auto best = check_feasible(instance, hi);
  if (!best) throw SolverError("relaxation infeasible at T=k");
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (auto point = check_feasible(instance, mid)) {
      hi = mid;
      best = std::move(point);
    } else {
      lo = mid + 1;
    }
  }
  return *best;
}

// Halves T from the largest agent load while the restricted relaxation stays
// feasible; returns the last feasible T (at most twice the optimum).
//
// When at least k candidates weigh nothing the optimum is 0 and the returned
// point is the integral selection of the first k of them.
inline FractionalSolution doubling(const Instance& instance) {
  require_valid(instance);
  const int m = instance.n_candidates;
  std::vector<int> free;
  double min_positive = std::numeric_limits<double>::infinity();
  for (int v = 0; v < m; ++v) {
    if (instance.weights[v] == 0.0) {
      free.push_back(v);
    } else {
      min_positive = std::min(min_positive, instance.weights[v]);
    }
  }
  if (static_cast<int>(free.size()) >= instance.demand) {
    FractionalSolution zero;
    zero.x.assign(static_cast<size_t>(m), 0.0);
    for (int i = 0; i < instance.demand; ++i) zero.x[free[i]] = 1.0;
    zero.t_star = 0.0;
    return zero;
  }

  double top = 0.0;
  for (const auto& row : instance.adjacency) {
    double load = 0.0;
    for (int v : row) load += instance.weights[v];
    top = std::max(top, load);
  }
  const FeasibilityOptions restricted{.restrict_heavy = true};
  auto best = check_feasible(instance, top, restricted);
  if (!best) {
    throw InputError("relaxation infeasible at the largest agent load (isolated candidates?)");
  }
  double t = top;
  while (t / 2 >= min_positive / 2) {
    auto point = check_feasible(instance, t / 2, restricted);
    if (!point) break;
    t /= 2;
    best = std::move(point);
  }
  return *best;
}

// Instance with the candidates heavier than T* removed and weights divided by
// T*, so the relaxation threshold becomes 1.
struct NormalizedInstance {
  Instance instance;
  std::vector<int> original_ids;  // normalized id -> original id
  std::vector<int> removed;       // original ids cut for exceeding T*
  double scale = 1.0;             // original value = normalized value * scale

  std::vector<int> to_original(const std::vector<int>& chosen) const {
    std::vector<int> ids;
    ids.reserve(chosen.size());
    for (int v : chosen) ids.push_back(original_ids.at(static_cast<size_t>(v)));
    std::sort(ids.begin(), ids.end());
    return ids;
  }
  double denormalize(double value) const { return value * scale; }
};

inline std::pair<NormalizedInstance, FractionalSolution> normalize(
    const Instance& instance, double t_star, const FractionalSolution& x) {
  require_valid(instance);
  if (!(t_star > 0.0)) throw InputError("normalize needs T* > 0");
  if (x.x.size() != static_cast<size_t>(instance.n_candidates)) {
    throw InputError("fractional solution size mismatch");
  }
  NormalizedInstance out;
  out.scale = t_star;
  std::vector<int> new_id(static_cast<size_t>(instance.n_candidates), -1);
  FractionalSolution point;
  point.t_star = 1.0;
  point.normalized = true;
  for (int v = 0; v < instance.n_candidates; ++v) {
    if (instance.weights[v] > t_star) {
      if (x.x[v] > kLpTolerance) {
        throw InputError("fractional solution uses candidate " + std::to_string(v) +
                         " heavier than T*");
      }
      out.removed.push_back(v);
      continue;
    }
    new_id[v] = static_cast<int>(out.original_ids.size());
    out.original_ids.push_back(v);
    point.x.push_back(x.x[v]);
  }
  Instance& reduced = out.instance;
  reduced.n_agents = instance.n_agents;
  reduced.n_candidates = static_cast<int>(out.original_ids.size());
  reduced.demand = instance.demand;
  reduced.adjacency.resize(instance.adjacency.size());
  for (size_t u = 0; u < instance.adjacency.size(); ++u) {
    for (int v : instance.adjacency[u]) {
      if (new_id[v] >= 0) reduced.adjacency[u].push_back(new_id[v]);
    }
  }
  for (int v : out.original_ids) reduced.weights.push_back(instance.weights[v] / t_star);
  return {std::move(out), std::move(point)};
}

// Lowers coordinates from the highest index down until sum x = k.
inline FractionalSolution trim_to_demand(FractionalSolution x, int k) {
  double excess = x.sum() - k;
  if (excess < -kLpTolerance) {
    throw InputError("fractional solution sums below the demand");
  }
  constexpr double kRoundoff = 1e-12;
  for (size_t v = x.x.size(); v-- > 0 && excess > kRoundoff;) {
    const double cut = std::min(x.x[v], excess);
    x.x[v] -= cut;
    excess -= cut;
  }
  return x;
}

}  // namespace fkss

#endif  // FKSS_LP_FEASIBILITY_HPP_
