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

// Fair k-set selection instances in bipartite form.
//
// Agents (L, dense ids 0..n-1) hold sorted adjacency lists into candidates
// (R, dense ids 0..m-1). Choosing a subset S of candidates charges every agent
// the total weight of its chosen neighbours; the objective is the maximum
// charge, subject to |S| >= demand.

#ifndef FKSS_CORE_HPP_
#define FKSS_CORE_HPP_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fkss {

// Malformed input: bad indices, negative weights, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A solver could not complete: numerical failure, exhausted budgets.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Instance {
  int n_agents = 0;
  int n_candidates = 0;
  std::vector<std::vector<int>> adjacency;  // per agent, sorted candidate ids
  std::vector<double> weights;              // per candidate, >= 0
  int demand = 0;

  bool unit_weights() const {
    return std::all_of(weights.begin(), weights.end(),
                       [](double w) { return w == 1.0; });
  }
};

struct Selection {
  std::vector<int> chosen;  // sorted candidate ids
  double value = 0.0;       // max disagreement of `chosen`
};

struct DegreeProfile {
  int max_degree = 0;
  int max_agent_degree = 0;
  int max_candidate_degree = 0;
};

inline Instance make_instance(int n_candidates,
                              std::vector<std::vector<int>> adjacency,
                              int demand, std::vector<double> weights = {}) {
  Instance instance;
  instance.n_agents = static_cast<int>(adjacency.size());
  instance.n_candidates = n_candidates;
  for (auto& row : adjacency) std::sort(row.begin(), row.end());
  instance.adjacency = std::move(adjacency);
  instance.weights = weights.empty()
                         ? std::vector<double>(static_cast<size_t>(n_candidates), 1.0)
                         : std::move(weights);
  instance.demand = demand;
  return instance;
}

// Lists every violated invariant; empty when the instance is well formed.
inline std::vector<std::string> validate(const Instance& instance) {
  std::vector<std::string> errors;
  const auto report = [&errors](auto&&... parts) {
    std::ostringstream out;
    (out << ... << parts);
    errors.push_back(out.str());
  };
  if (instance.n_agents < 0 || instance.n_candidates < 0) {
    report("negative vertex count");
    return errors;
  }
  if (static_cast<int>(instance.adjacency.size()) != instance.n_agents) {
    report("adjacency has ", instance.adjacency.size(), " rows, expected n=",
           instance.n_agents);
  }
  if (static_cast<int>(instance.weights.size()) != instance.n_candidates) {
    report("weights has ", instance.weights.size(), " entries, expected m=",
           instance.n_candidates);
  }
  for (size_t u = 0; u < instance.adjacency.size(); ++u) {
    const auto& row = instance.adjacency[u];
    for (size_t i = 0; i < row.size(); ++i) {
      if (row[i] < 0 || row[i] >= instance.n_candidates) {
        report("agent ", u, ": candidate index out of range (", row[i], ")");
      }
      if (i > 0 && row[i] == row[i - 1]) {
        report("agent ", u, ": duplicate neighbour ", row[i]);
      } else if (i > 0 && row[i] < row[i - 1]) {
        report("agent ", u, ": adjacency not sorted");
      }
    }
  }
  for (size_t v = 0; v < instance.weights.size(); ++v) {
    const double w = instance.weights[v];
    if (!(w >= 0.0)) report("candidate ", v, ": negative weight (", w, ")");
    if (w == std::numeric_limits<double>::infinity()) {
      report("candidate ", v, ": infinite weight");
    }
  }
  if (instance.demand < 1) report("demand must be >= 1 (got ", instance.demand, ")");
  if (instance.demand > instance.n_candidates) {
    report("demand ", instance.demand, " exceeds candidate count ",
           instance.n_candidates);
  }
  return errors;
}

inline void require_valid(const Instance& instance) {
  const auto errors = validate(instance);
  if (!errors.empty()) throw InputError("invalid instance: " + errors.front());
}

// Candidate-side adjacency (agents containing each candidate), sorted.
inline std::vector<std::vector<int>> candidate_neighbors(const Instance& instance) {
  std::vector<std::vector<int>> result(static_cast<size_t>(instance.n_candidates));
  for (int u = 0; u < instance.n_agents; ++u) {
    for (int v : instance.adjacency[u]) result[v].push_back(u);
  }
  return result;
}

inline DegreeProfile degree_profile(const Instance& instance) {
  DegreeProfile profile;
  std::vector<int> candidate_degree(static_cast<size_t>(instance.n_candidates), 0);
  for (const auto& row : instance.adjacency) {
    profile.max_agent_degree =
        std::max(profile.max_agent_degree, static_cast<int>(row.size()));
    for (int v : row) ++candidate_degree[v];
  }
  for (int d : candidate_degree) {
    profile.max_candidate_degree = std::max(profile.max_candidate_degree, d);
  }
  profile.max_degree = std::max(profile.max_agent_degree, profile.max_candidate_degree);
  return profile;
}

// Max over agents of the summed weight of chosen neighbours. 0 when either
// side is empty. Throws InputError for out-of-range or repeated ids.
inline double max_disagreement(const Instance& instance, const std::vector<int>& chosen) {
  std::vector<char> in(static_cast<size_t>(instance.n_candidates), 0);
  for (int v : chosen) {
    if (v < 0 || v >= instance.n_candidates) {
      throw InputError("candidate id out of range: " + std::to_string(v));
    }
    if (in[v]) throw InputError("candidate chosen twice: " + std::to_string(v));
    in[v] = 1;
  }
  double worst = 0.0;
  for (const auto& row : instance.adjacency) {
    double load = 0.0;
    for (int v : row) {
      if (in[v]) load += instance.weights[v];
    }
    worst = std::max(worst, load);
  }
  return worst;
}

// Sorts `chosen` and attaches its recomputed objective.
inline Selection make_selection(const Instance& instance, std::vector<int> chosen) {
  std::sort(chosen.begin(), chosen.end());
  Selection selection;
  selection.value = max_disagreement(instance, chosen);
  selection.chosen = std::move(chosen);
  return selection;
}

// Output of preprocess(): the reduced instance plus what is needed to map a
// reduced solution back to the caller's ids.
struct Preprocessed {
  Instance instance;
  std::vector<int> kept;     // reduced id -> original id
  std::vector<int> removed;  // original ids of isolated candidates
  int original_demand = 0;

  // Maps a reduced selection back and adds isolated candidates (free of
  // charge) until the original demand is covered again.
  Selection lift(const Instance& original, const Selection& reduced) const {
    std::vector<int> chosen;
    chosen.reserve(reduced.chosen.size() + removed.size());
    for (int v : reduced.chosen) chosen.push_back(kept.at(static_cast<size_t>(v)));
    const size_t needed =
        std::min(removed.size(), static_cast<size_t>(std::max(original_demand, 0)));
    chosen.insert(chosen.end(), removed.begin(), removed.begin() + static_cast<long>(needed));
    return make_selection(original, std::move(chosen));
  }
};

// Drops every degree-0 candidate, lowering the demand by one per removal
// (never below 0). Candidate ids are compacted in increasing order.
inline Preprocessed preprocess(const Instance& instance) {
  Preprocessed out;
  out.original_demand = instance.demand;
  std::vector<char> has_edge(static_cast<size_t>(instance.n_candidates), 0);
  for (const auto& row : instance.adjacency) {
    for (int v : row) has_edge[v] = 1;
  }
  std::vector<int> new_id(static_cast<size_t>(instance.n_candidates), -1);
  for (int v = 0; v < instance.n_candidates; ++v) {
    if (has_edge[v]) {
      new_id[v] = static_cast<int>(out.kept.size());
      out.kept.push_back(v);
    } else {
      out.removed.push_back(v);
    }
  }
  Instance& reduced = out.instance;
  reduced.n_agents = instance.n_agents;
  reduced.n_candidates = static_cast<int>(out.kept.size());
  reduced.adjacency.resize(instance.adjacency.size());
  for (size_t u = 0; u < instance.adjacency.size(); ++u) {
    for (int v : instance.adjacency[u]) reduced.adjacency[u].push_back(new_id[v]);
  }
  reduced.weights.reserve(out.kept.size());
  for (int v : out.kept) reduced.weights.push_back(instance.weights[v]);
  reduced.demand =
      std::max(0, instance.demand - static_cast<int>(out.removed.size()));
  return out;
}

}  // namespace fkss

#endif  // FKSS_CORE_HPP_
