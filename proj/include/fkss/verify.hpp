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

// Seeded verification suites. Each suite generates its own instances,
// compares solvers against the brute-force optimum or against statistical
// expectations, and returns named checks plus one measurement row per run.

#ifndef FKSS_VERIFY_HPP_
#define FKSS_VERIFY_HPP_

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fkss/core.hpp"
#include "fkss/exact/brute_force.hpp"
#include "fkss/exact/delta2.hpp"
#include "fkss/exact/laminar.hpp"
#include "fkss/gen.hpp"
#include "fkss/lp/feasibility.hpp"
#include "fkss/rng.hpp"
#include "fkss/rounding/independent.hpp"
#include "fkss/rounding/lll.hpp"
#include "fkss/rounding/pipage.hpp"
#include "fkss/rounding/trials.hpp"
#include "fkss/solve.hpp"

namespace fkss {

inline constexpr double kNoValue = std::numeric_limits<double>::quiet_NaN();

// One CSV row: family,n,m,k,delta,alg,seed,value,oracle,ratio,feasible,millis
struct Measurement {
  std::string family;
  int n = 0;
  int m = 0;
  int k = 0;
  int delta = 0;
  std::string alg;
  uint64_t seed = 0;
  double value = kNoValue;
  double oracle = kNoValue;
  bool feasible = true;
  double millis = 0.0;

  double ratio() const {
    if (std::isnan(value) || std::isnan(oracle)) return kNoValue;
    if (oracle == 0.0) return value == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    return value / oracle;
  }
};

inline const char* kCsvHeader = "family,n,m,k,delta,alg,seed,value,oracle,ratio,feasible,millis";

inline std::string format_number(double value) {
  if (std::isnan(value)) return "";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.10g", value);
  return buffer;
}

inline std::string csv_row(const Measurement& r) {
  std::ostringstream out;
  out << r.family << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.delta << ',' << r.alg
      << ',' << r.seed << ',' << format_number(r.value) << ',' << format_number(r.oracle)
      << ',' << format_number(r.ratio()) << ',' << (r.feasible ? "true" : "false") << ','
      << format_number(r.millis);
  return out.str();
}

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  std::vector<Measurement> rows;
  double seconds = 0.0;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return !checks.empty();
  }
  void check(std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
};

struct VerifyOptions {
  long trials = -1;  // per-suite default when negative
  int max_m = 12;
  uint64_t seed = 0;
};

namespace internal {

inline long trials_or(const VerifyOptions& options, long fallback) {
  return options.trials >= 0 ? options.trials : fallback;
}

inline Measurement measure(const std::string& family, const Instance& instance,
                           const std::string& alg, uint64_t seed) {
  Measurement r;
  r.family = family;
  r.n = instance.n_agents;
  r.m = instance.n_candidates;
  r.k = instance.demand;
  r.delta = degree_profile(instance).max_degree;
  r.alg = alg;
  r.seed = seed;
  return r;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, pattern, a, b, c);
  return buffer;
}

// Random bipartite parameters with m <= max_m and degree bound delta.
inline Instance random_small(Rng& rng, int max_m, int delta, WeightSpec weights,
                             uint64_t seed) {
  const int m = static_cast<int>(rng.between(1, max_m));
  const int min_n = (m + delta - 1) / delta;
  const int n = static_cast<int>(rng.between(min_n, m + 2));
  const int k = static_cast<int>(rng.between(1, m));
  return gen_random_bipartite(n, m, delta, k, weights, seed);
}

inline bool same_value(double a, double b, bool exact) {
  if (exact) return a == b;
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace internal

// Delta <= 2 solvers and the laminar DP against the oracle, every k.
inline SuiteReport verify_exact(const VerifyOptions& options = {}) {
  internal::Stopwatch clock;
  SuiteReport report;
  report.suite = "exact-vs-oracle";
  const long trials = internal::trials_or(options, 500);
  Rng params(options.seed ^ 0x65786163ULL);

  const auto run_class = [&](const std::string& family, const std::string& alg,
                             const std::function<std::pair<Instance, std::optional<LaminarFamily>>(
                                 long, uint64_t, bool&)>& make) {
    long instances = 0;
    long cases = 0;
    long mismatches = 0;
    std::string first;
    for (long i = 0; i < trials; ++i) {
      const uint64_t seed = options.seed + static_cast<uint64_t>(i);
      bool exact = true;
      auto [instance, family_form] = make(i, seed, exact);
      ++instances;
      for (int k = 1; k <= instance.n_candidates; ++k) {
        instance.demand = k;
        Selection got;
        if (family_form) {
          family_form->demand = k;
          got = solve_laminar(*family_form);
        } else if (instance.unit_weights()) {
          got = solve_delta2_unweighted(instance);
        } else {
          got = solve_delta2_weighted(instance);
        }
        const double recomputed = max_disagreement(instance, got.chosen);
        const Selection opt = brute_force_opt(instance, true);
        Measurement row = internal::measure(family, instance, alg, seed);
        row.value = recomputed;
        row.oracle = opt.value;
        row.feasible = static_cast<int>(got.chosen.size()) == k;
        report.rows.push_back(row);
        ++cases;
        const bool ok = row.feasible && internal::same_value(recomputed, opt.value, exact) &&
                        internal::same_value(got.value, recomputed, exact);
        if (!ok) {
          ++mismatches;
          if (first.empty()) {
            first = " first: seed " + std::to_string(seed) + " k=" + std::to_string(k) +
                    " got " + format_number(recomputed) + " oracle " +
                    format_number(opt.value);
          }
        }
      }
    }
    report.check(family + " matches oracle", mismatches == 0 && instances > 0 && instances >= trials,
                 std::to_string(instances) + " instances, " + std::to_string(cases) +
                     " (instance,k) cases, " + std::to_string(mismatches) + " mismatches" +
                     first);
  };

  run_class("delta2-unit", "delta2",
            [&](long, uint64_t seed, bool& exact) {
              exact = true;
              return std::pair{internal::random_small(params, options.max_m, 2,
                                                      WeightSpec::unit(), seed),
                               std::optional<LaminarFamily>{}};
            });
  run_class("delta2-weighted", "delta2",
            [&](long i, uint64_t seed, bool& exact) {
              exact = i % 2 == 0;
              const WeightSpec w = exact ? WeightSpec::integer(0, 9) : WeightSpec::real(0.1, 10.0);
              Instance inst = internal::random_small(params, options.max_m, 2, w, seed);
              // Integer draws can come out all ones; keep the class weighted.
              if (inst.unit_weights()) inst.weights[0] = 2.0;
              return std::pair{std::move(inst), std::optional<LaminarFamily>{}};
            });
  run_class("laminar", "laminar",
            [&](long i, uint64_t seed, bool& exact) {
              exact = i % 2 == 0;
              const WeightSpec w = exact ? WeightSpec::integer(0, 9) : WeightSpec::real(0.1, 10.0);
              const int elements = static_cast<int>(params.between(1, 10));
              // A partition tree over e >= 2 elements has at least e + 1 nodes.
              const int nodes = elements == 1 ? 1 : elements + 1;
              const int sets = static_cast<int>(params.between(1, std::min(options.max_m, nodes)));
              LaminarFamily family = gen_random_laminar(elements, sets, w, seed, 1);
              Instance inst = flatten(family);
              return std::pair{std::move(inst), std::optional<LaminarFamily>{std::move(family)}};
            });
  report.seconds = clock.seconds();
  report.check("runtime under 120 s", report.seconds < 120.0,
               internal::fmt("%.2f s", report.seconds));
  return report;
}

// Gap family: integral optimum k against relaxation bound 1.
inline SuiteReport verify_gap(const VerifyOptions& = {}) {
  internal::Stopwatch clock;
  SuiteReport report;
  report.suite = "gap";
  for (int k : {2, 3}) {
    const Instance instance = gen_gap_instance(k);
    const Selection opt = brute_force_opt(instance, true);
    const FractionalSolution lp = guess_tstar_unweighted(instance);
    const std::vector<double> uniform(static_cast<size_t>(instance.n_candidates), 1.0 / k);
    const LpResiduals r = lp_residuals(instance, uniform, 1.0);
    Measurement row = internal::measure("gap" + std::to_string(k), instance, "lp", 0);
    row.value = lp.t_star;
    row.oracle = opt.value;
    report.rows.push_back(row);
    const std::string label = "k=" + std::to_string(k);
    report.check(label + " oracle OPT = k", opt.value == k, "OPT " + format_number(opt.value));
    report.check(label + " LP T* = 1", lp.t_star == 1.0, "T* " + format_number(lp.t_star));
    report.check(label + " x = 1/k feasible at T = 1", r.worst() <= kLpTolerance,
                 "residual " + format_number(r.worst()));
    report.check(label + " measured gap = k", opt.value / lp.t_star == k,
                 "gap " + format_number(opt.value / lp.t_star));
  }
  report.seconds = clock.seconds();
  report.check("runtime under 10 s", report.seconds < 10.0,
               internal::fmt("%.2f s", report.seconds));
  return report;
}

// The fixed six-coordinate point used by the pipage statistics.
inline std::vector<double> pipage_reference_point() {
  return {0.3, 0.7, 0.5, 0.25, 0.75, 0.5};
}

struct PipageSample {
  long trials = 0;
  long wrong_size = 0;
  long drifted = 0;
  long max_iterations = 0;
  std::vector<double> frequency;
  std::vector<std::vector<double>> joint;
};

inline PipageSample sample_pipage(const std::vector<double>& x, int k, long trials,
                                  uint64_t seed) {
  PipageSample s;
  const size_t m = x.size();
  s.frequency.assign(m, 0.0);
  s.joint.assign(m, std::vector<double>(m, 0.0));
  PipageTrace trace;
  for (long t = 0; t < trials; ++t) {
    Rng rng(seed + static_cast<uint64_t>(t));
    const auto chosen = pipage_rounding(x, k, rng, &trace);
    ++s.trials;
    if (static_cast<int>(chosen.size()) != k) ++s.wrong_size;
    for (double sum : trace.sums) {
      if (std::abs(sum - k) > kFractionalTolerance) {
        ++s.drifted;
        break;
      }
    }
    s.max_iterations = std::max<long>(s.max_iterations, trace.iterations);
    for (size_t a = 0; a < chosen.size(); ++a) {
      s.frequency[chosen[a]] += 1.0;
      for (size_t b = a + 1; b < chosen.size(); ++b) {
        s.joint[chosen[a]][chosen[b]] += 1.0;
        s.joint[chosen[b]][chosen[a]] += 1.0;
      }
    }
  }
  for (size_t v = 0; v < m; ++v) {
    s.frequency[v] /= static_cast<double>(s.trials);
    for (double& j : s.joint[v]) j /= static_cast<double>(s.trials);
  }
  return s;
}

// Pipage: exact size, invariant sum, marginals and/or pairwise negative
// correlation on the reference point.
inline SuiteReport verify_pipage(const VerifyOptions& options, bool marginals, bool negcorr) {
  internal::Stopwatch clock;
  SuiteReport report;
  report.suite = marginals && negcorr ? "pipage" : (marginals ? "marginals" : "negcorr");
  const long trials = internal::trials_or(options, 100000);
  const std::vector<double> x = pipage_reference_point();
  const int k = 3;
  const PipageSample s = sample_pipage(x, k, trials, options.seed);
  const double n = static_cast<double>(s.trials);
  report.check("|S| = k on every run", s.wrong_size == 0,
               std::to_string(s.wrong_size) + " of " + std::to_string(s.trials) + " runs wrong");
  report.check("sum of x invariant on every step", s.drifted == 0,
               std::to_string(s.drifted) + " runs drifted; max iterations " +
                   std::to_string(s.max_iterations));
  report.check("iterations <= m", s.max_iterations <= static_cast<long>(x.size()),
               std::to_string(s.max_iterations));
  for (size_t v = 0; v < x.size(); ++v) {
    Measurement row;
    row.family = "pipage-point";
    row.m = static_cast<int>(x.size());
    row.k = k;
    row.alg = "pipage-marginal-" + std::to_string(v);
    row.seed = options.seed;
    row.value = s.frequency[v];
    row.oracle = x[v];
    report.rows.push_back(row);
  }
  if (marginals) {
    int outside = 0;
    double worst = 0.0;
    for (size_t v = 0; v < x.size(); ++v) {
      const double sigma = std::sqrt(x[v] * (1.0 - x[v]) / n);
      const double z = sigma > 0 ? std::abs(s.frequency[v] - x[v]) / sigma : 0.0;
      worst = std::max(worst, z);
      if (std::abs(s.frequency[v] - x[v]) > 3.0 * sigma) ++outside;
    }
    report.check("marginals within 3 sigma", outside == 0,
                 std::to_string(outside) + " of 6 outside; worst |z| = " + format_number(worst) +
                     " over " + std::to_string(s.trials) + " trials");
  }
  if (negcorr) {
    int violations = 0;
    int pairs = 0;
    double worst = -std::numeric_limits<double>::infinity();
    for (size_t u = 0; u < x.size(); ++u) {
      for (size_t v = u + 1; v < x.size(); ++v) {
        ++pairs;
        const double product = s.frequency[u] * s.frequency[v];
        const double sigma = std::sqrt(product * (1.0 - product) / n);
        const double excess = s.joint[u][v] - product;
        worst = std::max(worst, sigma > 0 ? excess / sigma : excess);
        if (excess > 3.0 * sigma) ++violations;
      }
    }
    report.check("pairwise negative correlation", violations == 0 && pairs == 15,
                 std::to_string(violations) + " of " + std::to_string(pairs) +
                     " pairs exceed product + 3 sigma; worst excess " + format_number(worst) +
                     " sigma");
  }
  report.seconds = clock.seconds();
  report.check("runtime under 60 s", report.seconds < 60.0,
               internal::fmt("%.2f s", report.seconds));
  return report;
}

// LLL rounding on random small instances: demand, proven bounds, budget.
inline SuiteReport verify_ratio(const VerifyOptions& options = {}) {
  internal::Stopwatch clock;
  SuiteReport report;
  report.suite = "ratio-bounds";
  const long runs = internal::trials_or(options, 200);
  Rng params(options.seed ^ 0x6c6c6cULL);
  long short_runs = 0, bound_fail = 0, budget_fail = 0, total = 0;
  long w_short = 0, w_bound_fail = 0, w_scaled_fail = 0, w_total = 0;
  long stress_short = 0, stress_budget = 0, stress_phase2 = 0;
  std::map<int, long> phases;
  std::string first;

  for (long i = 0; i < runs; ++i) {
    const uint64_t seed = options.seed + static_cast<uint64_t>(i);
    const int delta = 2 + static_cast<int>(i % 3);
    for (bool weighted : {false, true}) {
      const WeightSpec w = !weighted      ? WeightSpec::unit()
                           : (i % 2 == 0) ? WeightSpec::integer(1, 9)
                                          : WeightSpec::real(0.5, 8.0);
      const Instance instance = internal::random_small(params, options.max_m, delta, w, seed);
      const double opt = brute_force_opt(instance, true).value;
      Measurement row = internal::measure(weighted ? "random-weighted" : "random-unit", instance,
                                          "lll", seed);
      row.oracle = opt;
      Rng rng(seed);
      SolveOutcome out;
      try {
        out = solve(instance, Algorithm::kLll, rng);
      } catch (const SolverError& e) {
        ++(weighted ? w_total : total);
        ++budget_fail;
        row.feasible = false;
        report.rows.push_back(row);
        if (first.empty()) first = std::string(" first error: ") + e.what();
        continue;
      }
      ++phases[out.lll_phase];
      row.value = out.selection.value;
      row.feasible = out.feasible(instance);
      report.rows.push_back(row);
      if (!weighted) {
        ++total;
        if (!row.feasible) ++short_runs;
        if (row.value > lll_unweighted_bound(out.delta, opt)) ++bound_fail;
      } else {
        ++w_total;
        if (!row.feasible) ++w_short;
        if (row.value > lll_weighted_bound(out.delta, opt)) ++w_bound_fail;
        if (row.value > lll_weighted_bound_scaled(out.delta, opt, out.t_star)) ++w_scaled_fail;
      }
    }

    // Same shape with the boost set to 1 so the resampling phase runs.
    const Instance instance =
        internal::random_small(params, options.max_m, delta, WeightSpec::unit(), seed);
    const FractionalSolution x = guess_tstar_unweighted(instance);
    Rng rng(seed);
    try {
      const LllResult r = lll_rounding(instance, x, rng, false, LllOptions{.boost = 1.0});
      if (static_cast<int>(r.selection.chosen.size()) < instance.demand) ++stress_short;
      if (r.phase >= 2) ++stress_phase2;
    } catch (const SolverError& e) {
      ++stress_budget;
      if (first.empty()) first = std::string(" first error: ") + e.what();
    }
  }

  std::string phase_text;
  for (auto [phase, count] : phases) {
    phase_text += " phase" + std::to_string(phase) + "=" + std::to_string(count);
  }
  report.check("unweighted |S| >= k on every run", short_runs == 0 && total >= runs,
               std::to_string(total - short_runs) + "/" + std::to_string(total));
  report.check("unweighted value <= 12 ln(2e D^2)(OPT + 2)", bound_fail == 0,
               std::to_string(bound_fail) + " violations in " + std::to_string(total));
  report.check("weighted |S| >= k on every run", w_short == 0 && w_total >= runs,
               std::to_string(w_total - w_short) + "/" + std::to_string(w_total));
  report.check("weighted value <= 12 ln(2e D^2)(3 OPT + 1)", w_bound_fail == 0,
               std::to_string(w_bound_fail) + " violations in " + std::to_string(w_total));
  report.check("weighted value <= 12 ln(2e D^2)(3 OPT + T*)", w_scaled_fail == 0,
               std::to_string(w_scaled_fail) + " violations in " + std::to_string(w_total));
  report.check("resample budget never exhausted", budget_fail == 0 && stress_budget == 0,
               std::to_string(budget_fail + stress_budget) + " exhausted;" + phase_text +
                   "; boost-1 runs reaching resampling: " + std::to_string(stress_phase2) + first);
  report.check("boost-1 runs keep |S| >= k", stress_short == 0,
               std::to_string(stress_short) + " short of " + std::to_string(runs));
  report.seconds = clock.seconds();
  return report;
}

// Relaxation bounds: T* <= OPT (unit), doubling T* <= 2 OPT (weighted),
// infeasibility at T*/2, residuals.
inline SuiteReport verify_lower_bound(const VerifyOptions& options = {}) {
  internal::Stopwatch clock;
  SuiteReport report;
  report.suite = "lower-bound";
  const long runs = internal::trials_or(options, 200);
  Rng params(options.seed ^ 0x6c62ULL);
  long unit_fail = 0, weighted_fail = 0, half_fail = 0, residual_fail = 0;
  double worst_residual = 0.0;
  for (long i = 0; i < runs; ++i) {
    const uint64_t seed = options.seed + static_cast<uint64_t>(i);
    const int delta = 1 + static_cast<int>(params.between(1, 4));
    {
      const Instance instance =
          internal::random_small(params, options.max_m, delta, WeightSpec::unit(), seed);
      const double opt = brute_force_opt(instance, true).value;
      const FractionalSolution x = guess_tstar_unweighted(instance);
      const double residual = lp_residuals(instance, x.x, x.t_star).worst();
      worst_residual = std::max(worst_residual, residual);
      if (residual > kLpTolerance) ++residual_fail;
      if (x.t_star > opt) ++unit_fail;
      Measurement row = internal::measure("random-unit", instance, "lp", seed);
      row.value = x.t_star;
      row.oracle = opt;
      report.rows.push_back(row);
    }
    {
      const WeightSpec w = i % 2 == 0 ? WeightSpec::integer(0, 9) : WeightSpec::real(0.1, 10.0);
      const Instance instance = internal::random_small(params, options.max_m, delta, w, seed);
      const double opt = brute_force_opt(instance, true).value;
      const FractionalSolution x = doubling(instance);
      const double residual = lp_residuals(instance, x.x, x.t_star).worst();
      worst_residual = std::max(worst_residual, residual);
      if (residual > kLpTolerance) ++residual_fail;
      if (x.t_star > 2.0 * opt) ++weighted_fail;
      if (x.t_star > 0.0 &&
          check_feasible(instance, x.t_star / 2, FeasibilityOptions{.restrict_heavy = true})) {
        ++half_fail;
      }
      Measurement row = internal::measure("random-weighted", instance, "doubling", seed);
      row.value = x.t_star;
      row.oracle = opt;
      report.rows.push_back(row);
    }
  }
  report.check("unit weights: T* <= OPT", unit_fail == 0,
               std::to_string(unit_fail) + " violations in " + std::to_string(runs));
  report.check("weighted: doubling T* <= 2 OPT", weighted_fail == 0,
               std::to_string(weighted_fail) + " violations in " + std::to_string(runs));
  report.check("weighted: relaxation infeasible at T*/2", half_fail == 0,
               std::to_string(half_fail) + " violations in " + std::to_string(runs));
  report.check("LP residuals <= 1e-9", residual_fail == 0,
               "worst residual " + format_number(worst_residual));
  report.seconds = clock.seconds();
  return report;
}

// Independent rounding on one n=100, D=5 instance.
inline SuiteReport verify_independent(const VerifyOptions& options = {}) {
  internal::Stopwatch clock;
  SuiteReport report;
  report.suite = "independent";
  const long trials = internal::trials_or(options, 10000);
  const int n = 100;
  const Instance instance = gen_random_bipartite(n, 100, 5, 20, WeightSpec::unit(), options.seed);
  const FractionalSolution x = guess_tstar_unweighted(instance);
  const double limit =
      20.0 * std::log(static_cast<double>(n)) / std::log(std::log(static_cast<double>(n))) *
      x.t_star;
  const TrialStats stats = run_trials(RoundingAlgorithm::kIndependent, instance, x,
                                      seed_range(options.seed, trials), false, false);
  long within = 0;
  for (double v : stats.values) {
    if (v <= limit) ++within;
  }
  const double within_rate = static_cast<double>(within) / static_cast<double>(stats.trials);
  Measurement row = internal::measure("random-unit", instance, "independent", options.seed);
  row.value = stats.feasible_rate;
  row.oracle = x.t_star;
  report.rows.push_back(row);
  report.check("demand met in >= 50% of runs", stats.feasible_rate >= 0.5,
               "rate " + format_number(stats.feasible_rate) + " over " +
                   std::to_string(stats.trials) + " trials (T* = " + format_number(x.t_star) +
                   ", delta = " + std::to_string(degree_profile(instance).max_degree) + ")");
  report.check("value <= 20 ln n / ln ln n * T* in >= 99% of runs", within_rate >= 0.99,
               "rate " + format_number(within_rate) + ", limit " + format_number(limit));
  report.seconds = clock.seconds();
  return report;
}

// Graph-incidence instances: value <= 1 at demand p iff an independent set
// of size p exists.
inline SuiteReport verify_reduction(const VerifyOptions& options = {}) {
  internal::Stopwatch clock;
  SuiteReport report;
  report.suite = "reduction";
  const long per_size = internal::trials_or(options, 40);
  Rng rng(options.seed ^ 0x726564ULL);
  long graphs = 0, cases = 0, mismatches = 0;
  std::string first;

  const auto check_graph = [&](int vertices, const std::vector<std::pair<int, int>>& edges) {
    ++graphs;
    int best_independent = 0;
    for (uint32_t mask = 0; mask < (1u << vertices); ++mask) {
      bool independent = true;
      for (auto [a, b] : edges) {
        if ((mask >> a & 1) && (mask >> b & 1)) {
          independent = false;
          break;
        }
      }
      if (independent) best_independent = std::max(best_independent, std::popcount(mask));
    }
    for (int p = 1; p <= vertices; ++p) {
      const Instance instance = gen_incidence(vertices, edges, p);
      const double opt = brute_force_opt(instance, true).value;
      const bool value_one = opt <= 1.0;
      const bool has_set = best_independent >= p;
      ++cases;
      Measurement row = internal::measure("incidence", instance, "oracle", 0);
      row.value = opt;
      row.feasible = value_one == has_set;
      report.rows.push_back(row);
      if (value_one != has_set) {
        ++mismatches;
        if (first.empty()) {
          first = " first: " + std::to_string(vertices) + " vertices, p=" + std::to_string(p);
        }
      }
    }
  };

  // Every labelled graph on up to 4 vertices, then random samples up to 8.
  for (int v = 1; v <= 4; ++v) {
    std::vector<std::pair<int, int>> all;
    for (int a = 0; a < v; ++a) {
      for (int b = a + 1; b < v; ++b) all.emplace_back(a, b);
    }
    for (uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (size_t e = 0; e < all.size(); ++e) {
        if (mask >> e & 1) edges.push_back(all[e]);
      }
      check_graph(v, edges);
    }
  }
  for (int v = 5; v <= 8; ++v) {
    for (long t = 0; t < per_size; ++t) {
      const double density = rng.uniform();
      std::vector<std::pair<int, int>> edges;
      for (int a = 0; a < v; ++a) {
        for (int b = a + 1; b < v; ++b) {
          if (rng.bernoulli(density)) edges.emplace_back(a, b);
        }
      }
      check_graph(v, edges);
    }
  }
  report.check("value-1 feasibility matches independent sets", mismatches == 0 && graphs >= 100,
               std::to_string(graphs) + " graphs, " + std::to_string(cases) + " (graph,p) cases, " +
                   std::to_string(mismatches) + " mismatches" + first);
  report.seconds = clock.seconds();
  return report;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"exact-vs-oracle", "marginals", "negcorr",
                                              "ratio-bounds",    "gap",       "lower-bound",
                                              "independent",     "reduction"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
  if (name == "exact-vs-oracle") return verify_exact(options);
  if (name == "marginals") return verify_pipage(options, true, false);
  if (name == "negcorr") return verify_pipage(options, false, true);
  if (name == "ratio-bounds") return verify_ratio(options);
  if (name == "gap") return verify_gap(options);
  if (name == "lower-bound") return verify_lower_bound(options);
  if (name == "independent") return verify_independent(options);
  if (name == "reduction") return verify_reduction(options);
  throw InputError("unknown suite '" + name + "'");
}

}  // namespace fkss

#endif  // FKSS_VERIFY_HPP_
