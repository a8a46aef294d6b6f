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

// Exact solver for laminar set systems (every two sets nested or disjoint).
//
// The family is completed with the ground set and all missing singletons as
// dummy nodes and arranged as a tree whose leaves are the singletons. A set
// charges exactly the leaves below it, so the problem becomes "pick k
// non-dummy nodes minimising the worst root-to-leaf weight", solved by a
// bottom-up DP that splits the budget across children.

#ifndef FKSS_EXACT_LAMINAR_HPP_
#define FKSS_EXACT_LAMINAR_HPP_

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "fkss/core.hpp"

namespace fkss {

inline constexpr double kDummyWeight = std::numeric_limits<double>::infinity();

// A set system in its native form. Elements are 0..n_elements-1.
struct LaminarFamily {
  int n_elements = 0;
  std::vector<std::vector<int>> sets;
  std::vector<double> weights;  // per set
  int demand = 0;
};

// Bipartite view: elements become agents, sets become candidates.
inline Instance flatten(const LaminarFamily& family) {
  std::vector<std::vector<int>> adjacency(static_cast<size_t>(family.n_elements));
  for (size_t j = 0; j < family.sets.size(); ++j) {
    for (int e : family.sets[j]) {
      if (e < 0 || e >= family.n_elements) {
        throw InputError("set " + std::to_string(j) + ": element out of range");
      }
      adjacency[e].push_back(static_cast<int>(j));
    }
  }
  return make_instance(static_cast<int>(family.sets.size()), std::move(adjacency),
                       family.demand, family.weights);
}

namespace internal {

inline std::vector<int> sorted_unique(std::vector<int> set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

inline size_t intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  size_t i = 0, j = 0, count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count, ++i, ++j;
    }
  }
  return count;
}

}  // namespace internal

// True iff every pair of sets is strictly nested or disjoint. Two equal sets
// are neither, so repeated sets make the family non-laminar.
inline bool detect_laminar(const std::vector<std::vector<int>>& sets) {
  std::vector<std::vector<int>> sorted;
  sorted.reserve(sets.size());
  for (const auto& s : sets) sorted.push_back(internal::sorted_unique(s));
  for (size_t a = 0; a < sorted.size(); ++a) {
    for (size_t b = a + 1; b < sorted.size(); ++b) {
      const size_t common = internal::intersection_size(sorted[a], sorted[b]);
      const size_t sa = sorted[a].size();
      const size_t sb = sorted[b].size();
      const bool nested = (common == sa && sa < sb) || (common == sb && sb < sa);
      if (common != 0 && !nested) return false;
    }
  }
  return true;
}

struct LaminarNode {
  std::vector<int> elements;  // sorted
  double weight = 0.0;        // kDummyWeight for dummies
  bool dummy = false;
  int set_id = -1;  // index into the input family, -1 for dummies
  int parent = -1;
  std::vector<int> children;
};

// Nodes are stored parents-first; node 0 is the root (the ground set).
struct LaminarTree {
  int n_elements = 0;
  std::vector<LaminarNode> nodes;

  int dummy_count() const {
    return static_cast<int>(std::count_if(nodes.begin(), nodes.end(),
                                          [](const LaminarNode& n) { return n.dummy; }));
  }
  int selectable_count() const {
    return static_cast<int>(nodes.size()) - dummy_count();
  }
};

// Adds the ground set and missing singletons as dummies, then links each set
// to the smallest set strictly containing it. Sets are visited largest first
// while each element remembers the last (smallest) set seen containing it.
inline LaminarTree build_laminar_tree(int n_elements, const std::vector<std::vector<int>>& sets,
                                      const std::vector<double>& weights) {
  if (n_elements < 1) throw InputError("ground set must be non-empty");
  if (weights.size() != sets.size()) throw InputError("one weight per set required");
  std::vector<LaminarNode> pending;
  std::vector<char> has_singleton(static_cast<size_t>(n_elements), 0);
  bool has_ground = false;
  for (size_t j = 0; j < sets.size(); ++j) {
    LaminarNode node;
    node.elements = internal::sorted_unique(sets[j]);
    if (node.elements.empty()) {
      throw InputError("set " + std::to_string(j) + " is empty");
    }
    if (node.elements.front() < 0 || node.elements.back() >= n_elements) {
      throw InputError("set " + std::to_string(j) + ": element out of range");
    }
    if (!(weights[j] >= 0.0) || weights[j] == kDummyWeight) {
      throw InputError("set " + std::to_string(j) + ": weight must be finite and >= 0");
    }
    node.weight = weights[j];
    node.set_id = static_cast<int>(j);
    if (node.elements.size() == 1) has_singleton[node.elements[0]] = 1;
    if (static_cast<int>(node.elements.size()) == n_elements) has_ground = true;
    pending.push_back(std::move(node));
  }
  if (!detect_laminar(sets)) throw InputError("non-laminar input");

  const auto add_dummy = [&pending](std::vector<int> elements) {
    LaminarNode node;
    node.elements = std::move(elements);
    node.weight = kDummyWeight;
    node.dummy = true;
    pending.push_back(std::move(node));
  };
  if (!has_ground) {
    std::vector<int> all(static_cast<size_t>(n_elements));
    for (int e = 0; e < n_elements; ++e) all[e] = e;
    add_dummy(std::move(all));
  }
  for (int e = 0; e < n_elements; ++e) {
    if (!has_singleton[e]) add_dummy({e});
  }

  std::stable_sort(pending.begin(), pending.end(),
                   [](const LaminarNode& a, const LaminarNode& b) {
                     return a.elements.size() > b.elements.size();
                   });
  LaminarTree tree;
  tree.n_elements = n_elements;
  tree.nodes = std::move(pending);
  std::vector<int> owner(static_cast<size_t>(n_elements), -1);
  for (size_t i = 0; i < tree.nodes.size(); ++i) {
    auto& node = tree.nodes[i];
    node.parent = owner[node.elements.front()];
    if (node.parent != -1) tree.nodes[node.parent].children.push_back(static_cast<int>(i));
    for (int e : node.elements) owner[e] = static_cast<int>(i);
  }
  return tree;
}

// Picks exactly k non-dummy nodes minimising the worst leaf charge.
//
// D(u, x) is the best worst-leaf charge in u's subtree with x picks there.
// Children are merged pairwise: M(x) = min over y of max(M'(x - y), D(c, y)).
// Then D(u, x) = min(M(x), w_u + M(x - 1)); dummies never win the second
// branch because their weight is +inf. The returned ids index the input
// family.
inline Selection laminar_dp(const LaminarTree& tree, int k) {
  if (k < 0 || k > tree.selectable_count()) {
    throw InputError("k=" + std::to_string(k) + " exceeds the " +
                     std::to_string(tree.selectable_count()) + " selectable sets");
  }
  const double inf = std::numeric_limits<double>::infinity();
  const size_t budget = static_cast<size_t>(k);
  const size_t count = tree.nodes.size();
  std::vector<std::vector<double>> best(count);
  std::vector<std::vector<char>> picked(count);
  // split[u][j][x]: picks given to child j when the first j+1 children share x.
  std::vector<std::vector<std::vector<int>>> split(count);

  for (size_t u = count; u-- > 0;) {
    const auto& node = tree.nodes[u];
    std::vector<double> merged(budget + 1, inf);
    merged[0] = 0.0;
    for (size_t j = 0; j < node.children.size(); ++j) {
      const auto& child = best[static_cast<size_t>(node.children[j])];
      std::vector<double> next(budget + 1, inf);
      std::vector<int> arg(budget + 1, 0);
      for (size_t x = 0; x <= budget; ++x) {
        for (size_t y = 0; y <= x; ++y) {
          const double value = std::max(merged[x - y], child[y]);
          if (value < next[x]) {
            next[x] = value;
            arg[x] = static_cast<int>(y);
          }
        }
      }
      merged = std::move(next);
      split[u].push_back(std::move(arg));
    }
    best[u].assign(budget + 1, inf);
    picked[u].assign(budget + 1, 0);
    best[u][0] = merged[0];
    for (size_t x = 1; x <= budget; ++x) {
      const double with_node = node.weight + merged[x - 1];
      best[u][x] = merged[x];
      if (with_node < merged[x]) {
        best[u][x] = with_node;
        picked[u][x] = 1;
      }
    }
  }

  Selection selection;
  selection.value = best[0][budget];
  if (selection.value == inf) throw SolverError("laminar DP found no selection");
  std::vector<std::pair<int, size_t>> stack{{0, budget}};
  while (!stack.empty()) {
    auto [u, x] = stack.back();
    stack.pop_back();
    const auto& node = tree.nodes[static_cast<size_t>(u)];
    if (x > 0 && picked[u][x]) {
      selection.chosen.push_back(node.set_id);
      --x;
    }
    for (size_t j = node.children.size(); j-- > 0;) {
      const auto y = static_cast<size_t>(split[u][j][x]);
      stack.emplace_back(node.children[j], y);
      x -= y;
    }
  }
  std::sort(selection.chosen.begin(), selection.chosen.end());
  return selection;
}

// Full pipeline on a family: empty sets are free picks (they charge no
// element), the rest goes through the tree DP.
inline Selection solve_laminar(const LaminarFamily& family) {
  if (family.demand < 0 || family.demand > static_cast<int>(family.sets.size())) {
    throw InputError("demand out of range");
  }
  std::vector<std::vector<int>> nonempty;
  std::vector<double> weights;
  std::vector<int> ids;
  std::vector<int> empty;
  for (size_t j = 0; j < family.sets.size(); ++j) {
    if (family.sets[j].empty()) {
      empty.push_back(static_cast<int>(j));
    } else {
      nonempty.push_back(family.sets[j]);
      weights.push_back(family.weights.at(j));
      ids.push_back(static_cast<int>(j));
    }
  }
  const int residual = std::max(0, family.demand - static_cast<int>(empty.size()));
  Selection reduced;
  if (residual > 0) {
    reduced = laminar_dp(build_laminar_tree(family.n_elements, nonempty, weights), residual);
  }
  Selection result;
  result.value = reduced.value;
  for (int j : reduced.chosen) result.chosen.push_back(ids[static_cast<size_t>(j)]);
  const size_t fill = std::min(empty.size(), static_cast<size_t>(family.demand));
  result.chosen.insert(result.chosen.end(), empty.begin(), empty.begin() + static_cast<long>(fill));
  std::sort(result.chosen.begin(), result.chosen.end());
  return result;
}

}  // namespace fkss

#endif  // FKSS_EXACT_LAMINAR_HPP_
