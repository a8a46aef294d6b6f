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

// Exact solvers for instances of maximum degree at most 2.
//
// Such a bipartite graph is a disjoint union of alternating paths and cycles.
// The unit-weight case reduces to a maximum "at most one chosen neighbour per
// agent" set, picked in closed form per component. The weighted case scans
// the (at most 4n) candidate optimal values and decides each with a Red-Blue
// colouring: agents are red vertices capping their blue neighbours,
// candidates are white vertices, and exactly k whites must turn blue.

#ifndef FKSS_EXACT_DELTA2_HPP_
#define FKSS_EXACT_DELTA2_HPP_

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fkss/core.hpp"

namespace fkss {

namespace internal {

inline void require_delta_at_most_2(const Instance& instance) {
  require_valid(instance);
  if (degree_profile(instance).max_degree > 2) {
    throw InputError("maximum degree exceeds 2");
  }
}

inline void require_no_isolated_candidates(const Instance& instance) {
  const auto agents_of = candidate_neighbors(instance);
  for (size_t v = 0; v < agents_of.size(); ++v) {
    if (agents_of[v].empty()) {
      throw InputError("candidate " + std::to_string(v) +
                       " has degree 0; preprocess the instance first");
    }
  }
}

// Walks one component of a graph whose vertices have degree <= 2, starting
// at `start`, and returns the vertices in walk order.
inline std::vector<int> walk_component(const std::vector<std::vector<int>>& graph,
                                       int start) {
  std::vector<int> order{start};
  int prev = -1;
  int cur = start;
  while (true) {
    int next = -1;
    for (int nb : graph[cur]) {
      if (nb != prev) {
        next = nb;
        break;
      }
    }
    if (next == -1 || next == start) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

struct Component {
  std::vector<int> vertices;  // in walk order
  bool cycle = false;
};

// Splits a max-degree-2 graph into paths and cycles. Paths start at an
// endpoint, cycles at their smallest vertex; components are emitted in order
// of their smallest vertex.
inline std::vector<Component> paths_and_cycles(const std::vector<std::vector<int>>& graph) {
  const int size = static_cast<int>(graph.size());
  std::vector<int> label(static_cast<size_t>(size), -1);
  std::vector<Component> components;
  for (int s = 0; s < size; ++s) {
    if (label[s] != -1) continue;
    // Flood fill to find the component and an endpoint if there is one.
    std::vector<int> stack{s};
    std::vector<int> members;
    label[s] = static_cast<int>(components.size());
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (int y : graph[x]) {
        if (label[y] == -1) {
          label[y] = label[s];
          stack.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    int endpoint = -1;
    for (int x : members) {
      if (graph[x].size() < 2) {
        endpoint = x;
        break;
      }
    }
    Component component;
    component.cycle = endpoint == -1;
    component.vertices = walk_component(graph, component.cycle ? members.front() : endpoint);
    components.push_back(std::move(component));
  }
  return components;
}

}  // namespace internal

// Largest candidate set under which every agent has at most one chosen
// neighbour. Per component with l candidates: ceil(l/2) on paths, floor(l/2)
// on cycles, taking every other candidate along the walk.
inline std::vector<int> max_vertex_set(const Instance& instance) {
  internal::require_delta_at_most_2(instance);
  const int n = instance.n_agents;
  // Agents are vertices 0..n-1, candidates n..n+m-1.
  std::vector<std::vector<int>> graph(static_cast<size_t>(n + instance.n_candidates));
  for (int u = 0; u < n; ++u) {
    for (int v : instance.adjacency[u]) {
      graph[u].push_back(n + v);
      graph[n + v].push_back(u);
    }
  }
  std::vector<int> result;
  for (const auto& component : internal::paths_and_cycles(graph)) {
    std::vector<int> candidates;
    for (int x : component.vertices) {
      if (x >= n) candidates.push_back(x - n);
    }
    const size_t l = candidates.size();
    const size_t take = component.cycle ? l / 2 : (l + 1) / 2;
    for (size_t i = 0; i < take; ++i) result.push_back(candidates[2 * i]);
  }
  std::sort(result.begin(), result.end());
  return result;
}

// Unit weights, max degree 2, no isolated candidates. The optimum is 1 when
// k candidates fit under max_vertex_set and 2 otherwise.
inline Selection solve_delta2_unweighted(const Instance& instance) {
  internal::require_delta_at_most_2(instance);
  if (!instance.unit_weights()) throw InputError("unit weights required");
  internal::require_no_isolated_candidates(instance);
  const auto k = static_cast<size_t>(std::max(instance.demand, 0));
  std::vector<int> chosen = max_vertex_set(instance);
  if (chosen.size() >= k) {
    chosen.resize(k);
  } else {
    chosen.clear();
    for (size_t v = 0; v < k; ++v) chosen.push_back(static_cast<int>(v));
  }
  return make_selection(instance, std::move(chosen));
}

// Red vertices cap their blue neighbours; exactly k white vertices must be
// coloured blue. Vertices of both colours have degree <= 2.
struct RedBlueInstance {
  int n_white = 0;
  std::vector<std::vector<int>> red_neighbors;  // per red vertex, white ids
  std::vector<int> bound;                       // per red vertex, in {0,1,2}
  std::vector<char> eligible;                   // per white; empty = all
  int k = 0;
};

struct RedBlueColoring {
  bool feasible = false;
  std::vector<int> blue;  // sorted white ids, exactly k of them
};

namespace internal {

// reach[i][c][b]: a valid colouring of the first i+1 whites of `seq` with c
// blues exists and white i is blue iff b.
using ReachTable = std::vector<std::vector<std::array<char, 2>>>;

inline ReachTable chain_reach(const std::vector<int>& seq, const std::vector<char>& blocked,
                              int first_fixed) {
  const size_t len = seq.size();
  ReachTable reach(len, std::vector<std::array<char, 2>>(len + 1, {0, 0}));
  for (int b = 0; b <= 1; ++b) {
    if (first_fixed != -1 && b != first_fixed) continue;
    if (b == 1 && blocked[seq[0]]) continue;
    reach[0][b][b] = 1;
  }
  for (size_t i = 1; i < len; ++i) {
    for (size_t c = 0; c <= i; ++c) {
      for (int last = 0; last <= 1; ++last) {
        if (!reach[i - 1][c][last]) continue;
        reach[i][c][0] = 1;
        if (!last && !blocked[seq[i]]) reach[i][c + 1][1] = 1;
      }
    }
  }
  return reach;
}

// Colouring of `seq` with exactly `target` blues, or empty when impossible.
// For cycles the first and last white may not both be blue.
inline std::pair<bool, std::vector<int>> chain_witness(const std::vector<int>& seq,
                                                       const std::vector<char>& blocked,
                                                       bool cycle, size_t target) {
  const size_t len = seq.size();
  const bool closing = cycle && len >= 2;
  for (int first = 0; first <= 1; ++first) {
    const auto reach = chain_reach(seq, blocked, closing ? first : -1);
    for (int last = 0; last <= 1; ++last) {
      if (closing && first && last) continue;
      if (!reach[len - 1][target][last]) continue;
      std::vector<int> blue;
      size_t c = target;
      int b = last;
      for (size_t i = len; i-- > 0;) {
        if (b) blue.push_back(seq[i]);
        if (i == 0) break;
        const size_t prev_c = c - static_cast<size_t>(b);
        const int prev_b = reach[i - 1][prev_c][0] ? 0 : 1;
        c = prev_c;
        b = prev_b;
      }
      return {true, blue};
    }
    if (!closing) break;
  }
  return {false, {}};
}

// Blue counts reachable on one component.
inline std::vector<char> chain_counts(const std::vector<int>& seq,
                                      const std::vector<char>& blocked, bool cycle) {
  const size_t len = seq.size();
  const bool closing = cycle && len >= 2;
  std::vector<char> counts(len + 1, 0);
  for (int first = 0; first <= 1; ++first) {
    const auto reach = chain_reach(seq, blocked, closing ? first : -1);
    for (size_t c = 0; c <= len; ++c) {
      if (reach[len - 1][c][0] || (reach[len - 1][c][1] && !(closing && first))) {
        counts[c] = 1;
      }
    }
    if (!closing) break;
  }
  return counts;
}

}  // namespace internal

// Decides a Red-Blue instance. Per component a DP over walk positions
// tracking (blue count, previous white blue?) gives the reachable counts; a
// boolean knapsack over components hits exactly k, then both are unwound
// into a witness. O(n k) rather than linear.
inline RedBlueColoring red_blue(const RedBlueInstance& rb) {
  const int w = rb.n_white;
  if (w < 0 || rb.k < 0) throw InputError("malformed component: negative size");
  if (rb.bound.size() != rb.red_neighbors.size()) {
    throw InputError("malformed component: bound vector size mismatch");
  }
  if (!rb.eligible.empty() && static_cast<int>(rb.eligible.size()) != w) {
    throw InputError("malformed component: eligibility mask size mismatch");
  }
  std::vector<char> blocked(static_cast<size_t>(w), 0);
  for (int x = 0; x < w && !rb.eligible.empty(); ++x) blocked[x] = !rb.eligible[x];
  std::vector<int> white_degree(static_cast<size_t>(w), 0);
  std::set<std::pair<int, int>> not_both;
  for (size_t r = 0; r < rb.red_neighbors.size(); ++r) {
    const auto& nb = rb.red_neighbors[r];
    const int cap = rb.bound[r];
    if (cap < 0 || cap > 2) throw InputError("malformed component: bound not in {0,1,2}");
    if (nb.size() > 2) throw InputError("malformed component: red vertex of degree > 2");
    for (int x : nb) {
      if (x < 0 || x >= w) throw InputError("malformed component: white id out of range");
      if (++white_degree[x] > 2) {
        throw InputError("malformed component: white vertex of degree > 2");
      }
    }
    if (nb.size() == 2 && nb[0] == nb[1]) {
      throw InputError("malformed component: repeated edge");
    }
    if (static_cast<size_t>(cap) >= nb.size()) continue;
    if (cap == 0) {
      for (int x : nb) blocked[x] = 1;
    } else {  // cap == 1 with two neighbours
      not_both.emplace(std::min(nb[0], nb[1]), std::max(nb[0], nb[1]));
    }
  }

  std::vector<std::vector<int>> graph(static_cast<size_t>(w));
  for (const auto& [a, b] : not_both) {
    graph[a].push_back(b);
    graph[b].push_back(a);
  }
  const auto components = internal::paths_and_cycles(graph);

  // can[j][s]: the first j components reach exactly s blues.
  const size_t k = static_cast<size_t>(rb.k);
  std::vector<std::vector<char>> counts;
  std::vector<std::vector<char>> can(components.size() + 1, std::vector<char>(k + 1, 0));
  can[0][0] = 1;
  for (size_t j = 0; j < components.size(); ++j) {
    counts.push_back(internal::chain_counts(components[j].vertices, blocked,
                                            components[j].cycle));
    for (size_t s = 0; s <= k; ++s) {
      if (!can[j][s]) continue;
      for (size_t c = 0; c < counts[j].size() && s + c <= k; ++c) {
        if (counts[j][c]) can[j + 1][s + c] = 1;
      }
    }
  }
  RedBlueColoring result;
  if (!can[components.size()][k]) return result;
  result.feasible = true;
  size_t remaining = k;
  for (size_t j = components.size(); j-- > 0;) {
    size_t take = 0;
    while (!(counts[j].size() > take && counts[j][take] && remaining >= take &&
             can[j][remaining - take])) {
      ++take;
    }
    auto [ok, blue] = internal::chain_witness(components[j].vertices, blocked,
                                              components[j].cycle, take);
    if (!ok) throw SolverError("red-blue witness reconstruction failed");
    result.blue.insert(result.blue.end(), blue.begin(), blue.end());
    remaining -= take;
  }
  std::sort(result.blue.begin(), result.blue.end());
  return result;
}

// Sorted candidate optimal values: every agent's charge is one of
// {0, w_p, w_q, w_p + w_q} for its (at most two) neighbours p, q.
inline std::vector<double> candidate_values(const Instance& instance) {
  std::vector<double> values{0.0};
  for (const auto& row : instance.adjacency) {
    if (row.size() >= 1) values.push_back(instance.weights[row[0]]);
    if (row.size() == 2) {
      values.push_back(instance.weights[row[1]]);
      values.push_back(instance.weights[row[0]] + instance.weights[row[1]]);
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

// Red-Blue encoding of "is there a k-selection with max charge <= b".
// Candidates heavier than b are ineligible: each has an agent it would push
// above b on its own.
inline RedBlueInstance threshold_red_blue(const Instance& instance, double b) {
  RedBlueInstance rb;
  rb.n_white = instance.n_candidates;
  rb.k = instance.demand;
  rb.red_neighbors = instance.adjacency;
  rb.eligible.resize(static_cast<size_t>(instance.n_candidates));
  for (int v = 0; v < instance.n_candidates; ++v) {
    rb.eligible[v] = instance.weights[v] <= b;
  }
  for (const auto& row : instance.adjacency) {
    int cap = 0;
    if (row.size() == 2) {
      const double wp = instance.weights[row[0]];
      const double wq = instance.weights[row[1]];
      cap = b >= wp + wq ? 2 : (b >= std::min(wp, wq) ? 1 : 0);
    } else if (row.size() == 1) {
      cap = b >= instance.weights[row[0]] ? 1 : 0;
    }
    rb.bound.push_back(cap);
  }
  return rb;
}

// Weighted, max degree 2, no isolated candidates: the smallest candidate
// value whose Red-Blue instance is feasible is the optimum.
inline Selection solve_delta2_weighted(const Instance& instance) {
  internal::require_delta_at_most_2(instance);
  internal::require_no_isolated_candidates(instance);
  if (instance.demand <= 0) return make_selection(instance, {});
  for (double b : candidate_values(instance)) {
    const auto coloring = red_blue(threshold_red_blue(instance, b));
    if (coloring.feasible) return make_selection(instance, coloring.blue);
  }
  throw SolverError("no candidate value admits a selection");
}

}  // namespace fkss

#endif  // FKSS_EXACT_DELTA2_HPP_
