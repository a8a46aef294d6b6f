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

// Instance generators: the k-subset gap family, edge/vertex incidence graphs,
// seeded random bipartite and laminar instances, and explicit path/cycle
// unions.

#ifndef FKSS_GEN_HPP_
#define FKSS_GEN_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fkss/core.hpp"
#include "fkss/exact/laminar.hpp"
#include "fkss/rng.hpp"

namespace fkss {

struct WeightSpec {
  enum class Kind { kUnit, kInteger, kReal };
  Kind kind = Kind::kUnit;
  double lo = 1.0;
  double hi = 1.0;

  static WeightSpec unit() { return {}; }
  static WeightSpec integer(int lo, int hi) { return {Kind::kInteger, double(lo), double(hi)}; }
  static WeightSpec real(double lo, double hi) { return {Kind::kReal, lo, hi}; }

  void check() const {
    if (kind == Kind::kUnit) return;
    if (!(lo >= 0.0) || !(hi >= lo)) throw InputError("weight range must satisfy 0 <= lo <= hi");
  }

  double draw(Rng& rng) const {
    switch (kind) {
      case Kind::kUnit: return 1.0;
      case Kind::kInteger:
        return static_cast<double>(rng.between(static_cast<int64_t>(lo), static_cast<int64_t>(hi)));
      case Kind::kReal: return lo + (hi - lo) * rng.uniform();
    }
    return 1.0;
  }

  std::vector<double> draw_all(Rng& rng, int count) const {
    std::vector<double> weights(static_cast<size_t>(count));
    for (double& w : weights) w = draw(rng);
    return weights;
  }
};

// One agent per k-subset of k^2 candidates (lexicographic order), adjacent to
// exactly its subset. Every integral k-selection fills some agent, while
// x = 1/k keeps every agent at load 1.
inline Instance gen_gap_instance(int k) {
  if (k < 2 || k > 4) throw InputError("gap instance needs 2 <= k <= 4");
  const int m = k * k;
  std::vector<std::vector<int>> adjacency;
  std::vector<int> subset(static_cast<size_t>(k));
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    adjacency.push_back(subset);
    int i = k - 1;
    while (i >= 0 && subset[i] == m - k + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return make_instance(m, std::move(adjacency), k);
}

// Agents are the edges of a simple graph, candidates its vertices. Picking p
// vertices with value at most 1 is picking an independent set of size p.
inline Instance gen_incidence(int n_vertices, const std::vector<std::pair<int, int>>& edges,
                              int p) {
  if (n_vertices < 1) throw InputError("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<int>> adjacency;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n_vertices || b >= n_vertices) {
      throw InputError("edge endpoint out of range");
    }
    if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
    if (!seen.insert(std::minmax(a, b)).second) {
      throw InputError("duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    adjacency.push_back({std::min(a, b), std::max(a, b)});
  }
  return make_instance(n_vertices, std::move(adjacency), p);
}

// Random graph with every degree at most max_degree and no isolated
// candidate: each candidate is first attached to an agent with spare
// capacity, then extra edges are attempted up to a fixed budget.
inline Instance gen_random_bipartite(int n, int m, int max_degree, int k, WeightSpec weights,
                                     uint64_t seed) {
  if (n < 1 || m < 1) throw InputError("need at least one agent and one candidate");
  if (max_degree < 1) throw InputError("max degree must be >= 1");
  if (k < 1 || k > m) throw InputError("demand must lie in [1, m]");
  if (static_cast<long>(m) > static_cast<long>(n) * max_degree) {
    throw InputError("m > n * max_degree: some candidate would be isolated");
  }
  weights.check();
  Rng rng(seed);
  std::vector<std::vector<int>> adjacency(static_cast<size_t>(n));
  std::vector<int> candidate_degree(static_cast<size_t>(m), 0);
  std::set<std::pair<int, int>> edges;
  const auto add = [&](int u, int v) {
    adjacency[u].push_back(v);
    ++candidate_degree[v];
    edges.emplace(u, v);
  };

  std::vector<int> order(static_cast<size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<int> open(static_cast<size_t>(n));
  std::iota(open.begin(), open.end(), 0);
  for (int v : order) {
    if (open.empty()) throw InputError("ran out of agent capacity");
    const auto pick = static_cast<size_t>(rng.below(open.size()));
    const int u = open[pick];
    add(u, v);
    if (static_cast<int>(adjacency[u].size()) == max_degree) {
      open[pick] = open.back();
      open.pop_back();
    }
  }

  const long capacity = std::min(static_cast<long>(n), static_cast<long>(m)) * max_degree;
  const long extra = rng.between(0, std::max(0L, capacity - m));
  long attempts = 20 * extra + 20;
  for (long added = 0; added < extra && attempts > 0; --attempts) {
    const int u = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    const int v = static_cast<int>(rng.below(static_cast<uint64_t>(m)));
    if (static_cast<int>(adjacency[u].size()) >= max_degree) continue;
    if (candidate_degree[v] >= max_degree || edges.count({u, v})) continue;
    add(u, v);
    ++added;
  }
  return make_instance(m, std::move(adjacency), k, weights.draw_all(rng, m));
}

namespace internal {

// Splits `elements` into 2 or 3 random non-empty parts, recursively, and
// records every part. All recorded sets are distinct.
inline void random_partition(std::vector<int> elements, Rng& rng,
                             std::vector<std::vector<int>>& out) {
  std::sort(elements.begin(), elements.end());
  out.push_back(elements);
  if (elements.size() < 2) return;
  rng.shuffle(elements);
  const size_t max_parts = std::min<size_t>(3, elements.size());
  const auto parts = static_cast<size_t>(rng.between(2, static_cast<int64_t>(max_parts)));
  // Cut points: parts-1 distinct positions in [1, size-1].
  std::vector<size_t> cuts;
  while (cuts.size() + 1 < parts) {
    const auto c = static_cast<size_t>(rng.between(1, static_cast<int64_t>(elements.size()) - 1));
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(elements.size());
  size_t start = 0;
  for (size_t cut : cuts) {
    random_partition(std::vector<int>(elements.begin() + static_cast<long>(start),
                                      elements.begin() + static_cast<long>(cut)),
                     rng, out);
    start = cut;
  }
}

}  // namespace internal

// Random laminar family: a recursive random partition of the ground set, of
// which n_sets nodes are kept. `demand` <= 0 draws k uniformly from [1, n_sets].
inline LaminarFamily gen_random_laminar(int n_elements, int n_sets, WeightSpec weights,
                                        uint64_t seed, int demand = 0) {
  if (n_elements < 1) throw InputError("ground set must be non-empty");
  if (n_sets < 1) throw InputError("need at least one set");
  if (demand > n_sets) throw InputError("demand exceeds set count");
  weights.check();
  Rng rng(seed);
  std::vector<int> ground(static_cast<size_t>(n_elements));
  std::iota(ground.begin(), ground.end(), 0);
  std::vector<std::vector<int>> nodes;
  internal::random_partition(ground, rng, nodes);
  if (static_cast<size_t>(n_sets) > nodes.size()) {
    throw InputError("n_sets exceeds the " + std::to_string(nodes.size()) +
                     " sets of the random partition tree");
  }
  rng.shuffle(nodes);
  nodes.resize(static_cast<size_t>(n_sets));
  LaminarFamily family;
  family.n_elements = n_elements;
  family.sets = std::move(nodes);
  family.weights = weights.draw_all(rng, n_sets);
  family.demand = demand > 0 ? demand : static_cast<int>(rng.between(1, n_sets));
  return family;
}

struct ComponentSpec {
  enum class Kind { kPath, kCycle };
  Kind kind = Kind::kPath;
  int length = 1;  // candidates in the component
};

// Disjoint union of alternating components. A path of length l is
// a0 - r1 - a1 - ... - a(l-1) - rl (l agents, l candidates), a cycle of
// length l closes r_l back onto a0 (l agents, l candidates).
inline Instance gen_path_cycle(const std::vector<ComponentSpec>& spec, int k,
                               WeightSpec weights = {}, uint64_t seed = 0) {
  weights.check();
  std::vector<std::vector<int>> adjacency;
  int m = 0;
  for (const auto& c : spec) {
    if (c.length < 1) throw InputError("component length must be >= 1");
    if (c.kind == ComponentSpec::Kind::kCycle && c.length < 2) {
      throw InputError("cycles need at least 2 candidates");
    }
    const int base = static_cast<int>(adjacency.size());
    adjacency.resize(static_cast<size_t>(base + c.length));
    for (int i = 0; i < c.length; ++i) {
      const int r = m + i;
      adjacency[base + i].push_back(r);
      if (i + 1 < c.length) {
        adjacency[base + i + 1].push_back(r);
      } else if (c.kind == ComponentSpec::Kind::kCycle) {
        adjacency[base].push_back(r);
      }
    }
    m += c.length;
  }
  if (k < 1 || k > m) throw InputError("demand must lie in [1, m]");
  Rng rng(seed);
  return make_instance(m, std::move(adjacency), k, weights.draw_all(rng, m));
}

}  // namespace fkss

#endif  // FKSS_GEN_HPP_
