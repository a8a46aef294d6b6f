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

// JSON instance format:
//
//   {"n": 2, "m": 3, "k": 1, "weights": [1, 2, 1], "adj": [[0, 1], [2]]}
//
// `weights` may be omitted (all 1). Laminar inputs replace `adj` with
// `sets`, one element list per candidate set over elements 0..n-1.

#ifndef FKSS_IO_HPP_
#define FKSS_IO_HPP_

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fkss/core.hpp"
#include "fkss/exact/laminar.hpp"

namespace fkss {

struct LoadedInstance {
  Instance instance;                    // always the bipartite form
  std::optional<LaminarFamily> family;  // set when the document used `sets`
};

inline LoadedInstance parse_instance(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("instance document must be a JSON object");
  for (const char* key : {"n", "m", "k"}) {
    if (!doc.contains(key) || !doc[key].is_number_integer()) {
      throw InputError(std::string("field '") + key + "' missing or not an integer");
    }
  }
  const int n = doc["n"].get<int>();
  const int m = doc["m"].get<int>();
  const int k = doc["k"].get<int>();
  if (n < 0 || m < 0) throw InputError("'n' and 'm' must be >= 0");
  std::vector<double> weights;
  if (doc.contains("weights")) {
    if (!doc["weights"].is_array()) throw InputError("'weights' must be an array");
    for (const auto& w : doc["weights"]) {
      if (!w.is_number()) throw InputError("'weights' entries must be numbers");
      weights.push_back(w.get<double>());
    }
    if (weights.size() != static_cast<size_t>(m)) {
      throw InputError("'weights' has " + std::to_string(weights.size()) +
                       " entries, expected m=" + std::to_string(m));
    }
  } else {
    weights.assign(static_cast<size_t>(m), 1.0);
  }
  const auto read_lists = [](const nlohmann::json& value, const char* name) {
    if (!value.is_array()) throw InputError(std::string("'") + name + "' must be an array");
    std::vector<std::vector<int>> lists;
    for (const auto& row : value) {
      if (!row.is_array()) throw InputError(std::string("'") + name + "' rows must be arrays");
      std::vector<int> ids;
      for (const auto& id : row) {
        if (!id.is_number_integer()) throw InputError(std::string("'") + name + "' ids must be integers");
        ids.push_back(id.get<int>());
      }
      lists.push_back(std::move(ids));
    }
    return lists;
  };

  LoadedInstance loaded;
  const bool has_adj = doc.contains("adj");
  const bool has_sets = doc.contains("sets");
  if (has_adj == has_sets) throw InputError("exactly one of 'adj' or 'sets' is required");
  if (has_adj) {
    auto adjacency = read_lists(doc["adj"], "adj");
    if (adjacency.size() != static_cast<size_t>(n)) {
      throw InputError("'adj' has " + std::to_string(adjacency.size()) +
                       " rows, expected n=" + std::to_string(n));
    }
    loaded.instance = make_instance(m, std::move(adjacency), k, std::move(weights));
  } else {
    LaminarFamily family;
    family.n_elements = n;
    family.sets = read_lists(doc["sets"], "sets");
    if (family.sets.size() != static_cast<size_t>(m)) {
      throw InputError("'sets' has " + std::to_string(family.sets.size()) +
                       " entries, expected m=" + std::to_string(m));
    }
    family.weights = std::move(weights);
    family.demand = k;
    loaded.instance = flatten(family);
    loaded.family = std::move(family);
  }
  const auto errors = validate(loaded.instance);
  if (!errors.empty()) throw InputError("invalid instance: " + errors.front());
  return loaded;
}

inline LoadedInstance parse_instance(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_instance(doc);
}

inline LoadedInstance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

namespace internal {

inline nlohmann::json weights_json(const std::vector<double>& weights) {
  nlohmann::json out = nlohmann::json::array();
  for (double w : weights) {
    if (std::abs(w) < 1e15 && w == std::floor(w)) {
      out.push_back(static_cast<long long>(w));
    } else {
      out.push_back(w);
    }
  }
  return out;
}

}  // namespace internal

inline nlohmann::json to_json(const Instance& instance) {
  nlohmann::json doc;
  doc["n"] = instance.n_agents;
  doc["m"] = instance.n_candidates;
  doc["k"] = instance.demand;
  if (!instance.unit_weights()) doc["weights"] = internal::weights_json(instance.weights);
  doc["adj"] = instance.adjacency;
  return doc;
}

inline nlohmann::json to_json(const LaminarFamily& family) {
  nlohmann::json doc;
  doc["n"] = family.n_elements;
  doc["m"] = family.sets.size();
  doc["k"] = family.demand;
  const bool unit = std::all_of(family.weights.begin(), family.weights.end(),
                                [](double w) { return w == 1.0; });
  if (!unit) doc["weights"] = internal::weights_json(family.weights);
  doc["sets"] = family.sets;
  return doc;
}

}  // namespace fkss

#endif  // FKSS_IO_HPP_
