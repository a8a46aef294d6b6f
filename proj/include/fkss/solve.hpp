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

// End-to-end pipelines: preprocessing, relaxation, normalization, rounding
// and mapping back to the caller's ids.

#ifndef FKSS_SOLVE_HPP_
#define FKSS_SOLVE_HPP_

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "fkss/core.hpp"
#include "fkss/exact/brute_force.hpp"
#include "fkss/exact/delta2.hpp"
#include "fkss/exact/laminar.hpp"
#include "fkss/lp/feasibility.hpp"
#include "fkss/rng.hpp"
#include "fkss/rounding/independent.hpp"
#include "fkss/rounding/lll.hpp"
#include "fkss/rounding/pipage.hpp"

namespace fkss {

enum class Algorithm { kAuto, kDelta2, kLaminar, kOracle, kLll, kPipage, kIndependent };

inline std::string to_string(Algorithm alg) {
  switch (alg) {
    case Algorithm::kAuto: return "auto";
    case Algorithm::kDelta2: return "delta2";
    case Algorithm::kLaminar: return "laminar";
    case Algorithm::kOracle: return "oracle";
    case Algorithm::kLll: return "lll";
    case Algorithm::kPipage: return "pipage";
    case Algorithm::kIndependent: return "independent";
  }
  return "?";
}

inline std::optional<Algorithm> parse_algorithm(const std::string& name) {
  for (Algorithm alg : {Algorithm::kAuto, Algorithm::kDelta2, Algorithm::kLaminar,
                        Algorithm::kOracle, Algorithm::kLll, Algorithm::kPipage,
                        Algorithm::kIndependent}) {
    if (to_string(alg) == name) return alg;
  }
  return std::nullopt;
}

struct SolveOutcome {
  Selection selection;  // value recomputed on the input instance
  Algorithm algorithm = Algorithm::kAuto;  // what actually ran
  bool weighted = false;
  double t_star = std::numeric_limits<double>::quiet_NaN();  // relaxation bound, original units
  int lll_phase = 0;
  long resamples = 0;
  int delta = 0;  // of the instance the rounding ran on

  bool feasible(const Instance& instance) const {
    return static_cast<int>(selection.chosen.size()) >= instance.demand;
  }
};

// Candidate-side view of a bipartite instance as a set family over agents.
inline LaminarFamily as_family(const Instance& instance) {
  LaminarFamily family;
  family.n_elements = instance.n_agents;
  family.sets = candidate_neighbors(instance);
  family.weights = instance.weights;
  family.demand = instance.demand;
  return family;
}

inline bool is_laminar_instance(const Instance& instance) {
  return detect_laminar(candidate_neighbors(instance));
}

namespace internal {

inline Selection round_reduced(const Instance& reduced, Algorithm alg, Rng& rng,
                               const LllOptions& lll, SolveOutcome& outcome) {
  outcome.weighted = !reduced.unit_weights();
  if (!outcome.weighted) {
    const FractionalSolution x = guess_tstar_unweighted(reduced);
    outcome.t_star = x.t_star;
    outcome.delta = degree_profile(reduced).max_degree;
    switch (alg) {
      case Algorithm::kPipage:
        return make_selection(
            reduced, pipage_rounding(trim_to_demand(x, reduced.demand).x, reduced.demand, rng));
      case Algorithm::kIndependent:
        return independent_rounding(reduced, x, rng);
      default: {
        const LllResult r = lll_rounding(reduced, x, rng, false, lll);
        outcome.lll_phase = r.phase;
        outcome.resamples = r.resamples;
        return r.selection;
      }
    }
  }
  if (alg == Algorithm::kIndependent) {
    throw InputError("independent rounding supports unit weights only");
  }
  const FractionalSolution x = doubling(reduced);
  outcome.t_star = x.t_star;
  if (x.t_star == 0.0) {
    std::vector<int> chosen;
    for (size_t v = 0; v < x.x.size(); ++v) {
      if (x.x[v] == 1.0) chosen.push_back(static_cast<int>(v));
    }
    outcome.delta = degree_profile(reduced).max_degree;
    return make_selection(reduced, std::move(chosen));
  }
  const auto [normalized, point] = normalize(reduced, x.t_star, x);
  const Instance& scaled = normalized.instance;
  outcome.delta = degree_profile(scaled).max_degree;
  std::vector<int> chosen;
  if (alg == Algorithm::kPipage) {
    chosen = pipage_rounding(trim_to_demand(point, scaled.demand).x, scaled.demand, rng);
  } else {
    const LllResult r = lll_rounding(scaled, point, rng, true, lll);
    outcome.lll_phase = r.phase;
    outcome.resamples = r.resamples;
    chosen = r.selection.chosen;
  }
  return make_selection(reduced, normalized.to_original(chosen));
}

}  // namespace internal

// `family` carries the native set-system form when the input was laminar.
inline SolveOutcome solve(const Instance& instance, Algorithm alg, Rng& rng,
                          const LaminarFamily* family = nullptr, const LllOptions& lll = {}) {
  require_valid(instance);
  SolveOutcome outcome;
  outcome.weighted = !instance.unit_weights();
  const Preprocessed pre = preprocess(instance);

  if (alg == Algorithm::kAuto) {
    if (family != nullptr) {
      alg = Algorithm::kLaminar;
    } else if (degree_profile(pre.instance).max_degree <= 2) {
      alg = Algorithm::kDelta2;
    } else if (is_laminar_instance(instance)) {
      alg = Algorithm::kLaminar;
    } else {
      alg = Algorithm::kPipage;
    }
  }
  outcome.algorithm = alg;

  switch (alg) {
    case Algorithm::kOracle:
      outcome.selection = make_selection(instance, brute_force_opt(instance, true).chosen);
      return outcome;
    case Algorithm::kLaminar: {
      const LaminarFamily native = family != nullptr ? *family : as_family(instance);
      outcome.selection = make_selection(instance, solve_laminar(native).chosen);
      return outcome;
    }
    default:
      break;
  }

  if (pre.instance.demand == 0) {
    outcome.selection = pre.lift(instance, Selection{});
    return outcome;
  }
  Selection reduced;
  if (alg == Algorithm::kDelta2) {
    reduced = pre.instance.unit_weights() ? solve_delta2_unweighted(pre.instance)
                                          : solve_delta2_weighted(pre.instance);
  } else {
    reduced = internal::round_reduced(pre.instance, alg, rng, lll, outcome);
  }
  outcome.selection = pre.lift(instance, reduced);
  return outcome;
}

}  // namespace fkss

#endif  // FKSS_SOLVE_HPP_
