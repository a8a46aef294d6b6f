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

// fkss command-line tool: gen, solve, lp, round, verify, bench.
//
// Machine-readable output (JSON, CSV) goes to stdout or the given file, a
// human-readable table goes to stderr. Exit codes: 0 success, 1 input error,
// 2 solver error, 3 verification failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fkss/fkss.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace fkss;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitSolver = 2;
constexpr int kExitVerify = 3;

json number(double value) {
  if (std::isnan(value)) return nullptr;
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::abs(value) < 1e15 && value == std::floor(value)) return static_cast<long long>(value);
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

int to_int(const std::string& text, const std::string& what) {
  try {
    size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw InputError("cannot parse " + what + " '" + text + "'");
}

double to_double(const std::string& text, const std::string& what) {
  try {
    size_t used = 0;
    const double value = std::stod(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw InputError("cannot parse " + what + " '" + text + "'");
}

// unit | int:LO:HI | real:LO:HI
WeightSpec parse_weights(const std::string& text) {
  if (text == "unit") return WeightSpec::unit();
  const auto parts = split(text, ':');
  if (parts.size() == 3 && parts[0] == "int") {
    return WeightSpec::integer(to_int(parts[1], "weight bound"), to_int(parts[2], "weight bound"));
  }
  if (parts.size() == 3 && parts[0] == "real") {
    return WeightSpec::real(to_double(parts[1], "weight bound"),
                            to_double(parts[2], "weight bound"));
  }
  throw InputError("weights must be unit, int:LO:HI or real:LO:HI, got '" + text + "'");
}

// path:3,cycle:4
std::vector<ComponentSpec> parse_components(const std::string& text) {
  std::vector<ComponentSpec> spec;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 2 || (parts[0] != "path" && parts[0] != "cycle")) {
      throw InputError("component must be path:L or cycle:L, got '" + item + "'");
    }
    spec.push_back({parts[0] == "path" ? ComponentSpec::Kind::kPath : ComponentSpec::Kind::kCycle,
                    to_int(parts[1], "component length")});
  }
  if (spec.empty()) throw InputError("no components given");
  return spec;
}

// 0-1,1-2
std::vector<std::pair<int, int>> parse_edges(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, '-');
    if (parts.size() != 2) throw InputError("edge must be A-B, got '" + item + "'");
    edges.emplace_back(to_int(parts[0], "edge endpoint"), to_int(parts[1], "edge endpoint"));
  }
  return edges;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

// Two-column aligned table on stderr.
void print_table(const std::vector<std::pair<std::string, std::string>>& rows) {
  size_t width = 0;
  for (const auto& [key, value] : rows) width = std::max(width, key.size());
  for (const auto& [key, value] : rows) {
    std::cerr << std::left << std::setw(static_cast<int>(width) + 2) << key << value << '\n';
  }
}

std::string show(double value) {
  const std::string text = format_number(value);
  return text.empty() ? "-" : text;
}

json instance_summary(const Instance& instance) {
  return {{"n", instance.n_agents},
          {"m", instance.n_candidates},
          {"k", instance.demand},
          {"delta", degree_profile(instance).max_degree},
          {"weighted", !instance.unit_weights()}};
}

// ------------------------------------------------------------------ gen

struct GenArgs {
  std::string family;
  int k = 2;
  int n = 8;
  int m = 10;
  int delta = 3;
  int vertices = 0;
  std::string edges;
  std::string components;
  std::string weights = "unit";
  std::string out;
};

int cmd_gen(const GenArgs& a, uint64_t seed) {
  nlohmann::json doc;
  if (a.family == "gap") {
    doc = to_json(gen_gap_instance(a.k));
  } else if (a.family == "incidence") {
    doc = to_json(gen_incidence(a.vertices, parse_edges(a.edges), a.k));
  } else if (a.family == "random-bipartite") {
    doc = to_json(gen_random_bipartite(a.n, a.m, a.delta, a.k, parse_weights(a.weights), seed));
  } else if (a.family == "random-laminar") {
    doc = to_json(gen_random_laminar(a.n, a.m, parse_weights(a.weights), seed, a.k));
  } else if (a.family == "path-cycle") {
    doc = to_json(gen_path_cycle(parse_components(a.components), a.k, parse_weights(a.weights), seed));
  } else {
    throw InputError("unknown family '" + a.family +
                     "' (gap, incidence, random-bipartite, random-laminar, path-cycle)");
  }
  write_text(a.out, doc.dump() + "\n");
  print_table({{"family", a.family},
               {"n", doc["n"].dump()},
               {"m", doc["m"].dump()},
               {"k", doc["k"].dump()},
               {"output", a.out.empty() ? "stdout" : a.out}});
  return kExitOk;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string file;
  std::string alg = "auto";
  int oracle_max = 20;
  double boost = 0.0;
  long max_resamples = -1;
};

struct BoundCheck {
  std::string name = "none";
  double limit = kNoValue;
  std::optional<bool> ok;  // empty when nothing could be checked
};

// Proven guarantee of the algorithm that ran, checked against the oracle.
BoundCheck check_bound(const SolveOutcome& out, double value, double oracle) {
  BoundCheck check;
  switch (out.algorithm) {
    case Algorithm::kOracle:
    case Algorithm::kDelta2:
    case Algorithm::kLaminar:
      check.name = "exact";
      check.limit = oracle;
      if (!std::isnan(oracle)) check.ok = std::abs(value - oracle) <= 1e-9 * std::max(1.0, oracle);
      break;
    case Algorithm::kLll: {
      const int d = std::max(1, out.delta);
      if (out.weighted) {
        check.name = "12 ln(2e D^2) (3 OPT + T*)";
        if (!std::isnan(oracle)) check.limit = lll_weighted_bound_scaled(d, oracle, out.t_star);
      } else {
        check.name = "12 ln(2e D^2) (OPT + 2)";
        if (!std::isnan(oracle)) check.limit = lll_unweighted_bound(d, oracle);
      }
      if (!std::isnan(check.limit)) check.ok = value <= check.limit * (1.0 + 1e-12);
      break;
    }
    default:
      break;
  }
  return check;
}

int cmd_solve(const SolveArgs& a, uint64_t seed) {
  const auto alg = parse_algorithm(a.alg);
  if (!alg) throw InputError("unknown algorithm '" + a.alg + "'");
  const LoadedInstance loaded = read_instance(a.file);
  const Instance& instance = loaded.instance;

  Rng rng(seed);
  const auto start = std::chrono::steady_clock::now();
  const SolveOutcome out = solve(instance, *alg, rng, loaded.family ? &*loaded.family : nullptr,
                                 LllOptions{a.boost, a.max_resamples});
  const double millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const double value = max_disagreement(instance, out.selection.chosen);
  double oracle = kNoValue;
  if (instance.n_candidates <= std::min(a.oracle_max, kOracleMaxCandidates)) {
    oracle = brute_force_opt(instance, true).value;
  }
  const double ratio = std::isnan(oracle) ? kNoValue
                       : oracle == 0.0    ? (value == 0.0 ? 1.0 : INFINITY)
                                          : value / oracle;
  const bool feasible = out.feasible(instance);
  const BoundCheck bound = check_bound(out, value, oracle);

  json report = {{"instance", instance_summary(instance)},
                 {"algorithm", to_string(out.algorithm)},
                 {"requested", a.alg},
                 {"seed", seed},
                 {"selection", out.selection.chosen},
                 {"value", number(value)},
                 {"oracle", number(oracle)},
                 {"ratio", number(ratio)},
                 {"feasible", feasible},
                 {"millis", millis},
                 {"bound", bound.name},
                 {"bound_limit", number(bound.limit)},
                 {"bound_ok", bound.ok ? json(*bound.ok) : json(nullptr)},
                 {"t_star", number(out.t_star)}};
  if (out.algorithm == Algorithm::kLll) {
    report["lll_phase"] = out.lll_phase;
    report["resamples"] = out.resamples;
  }
  std::cout << report.dump(2) << '\n';

  print_table({{"algorithm", to_string(out.algorithm)},
               {"n / m / k", std::to_string(instance.n_agents) + " / " +
                                 std::to_string(instance.n_candidates) + " / " +
                                 std::to_string(instance.demand)},
               {"chosen", std::to_string(out.selection.chosen.size())},
               {"value", show(value)},
               {"oracle", show(oracle)},
               {"ratio", show(ratio)},
               {"T*", show(out.t_star)},
               {"bound", bound.name + (bound.ok ? (*bound.ok ? " ok" : " VIOLATED") : "")},
               {"millis", show(millis)}});

  // Independent rounding may fall short of the demand; every other
  // algorithm must meet it.
  if (!feasible && out.algorithm != Algorithm::kIndependent) return kExitVerify;
  if (bound.ok && !*bound.ok) return kExitVerify;
  return kExitOk;
}

// ------------------------------------------------------------------- lp

struct LpArgs {
  std::string file;
  double t = -1.0;
  bool restrict_heavy = false;
};

json residuals_json(const LpResiduals& r) {
  return {{"load", r.load}, {"demand", r.demand}, {"box", r.box}, {"worst", r.worst()}};
}

int cmd_lp(const LpArgs& a) {
  const Instance instance = read_instance(a.file).instance;
  json report = {{"instance", instance_summary(instance)}};
  if (a.t >= 0.0) {
    const auto x = check_feasible(instance, a.t, {.restrict_heavy = a.restrict_heavy});
    report["t"] = a.t;
    report["feasible"] = x.has_value();
    if (x) {
      report["x"] = x->x;
      report["residuals"] = residuals_json(lp_residuals(instance, x->x, a.t));
    }
    std::cout << report.dump(2) << '\n';
    print_table({{"T", show(a.t)}, {"feasible", x ? "yes" : "no"}});
    return kExitOk;
  }
  const bool weighted = !instance.unit_weights();
  const FractionalSolution x = weighted ? doubling(instance) : guess_tstar_unweighted(instance);
  const LpResiduals r = lp_residuals(instance, x.x, x.t_star);
  report["method"] = weighted ? "doubling" : "binary-search";
  report["t_star"] = number(x.t_star);
  report["x"] = x.x;
  report["residuals"] = residuals_json(r);
  std::cout << report.dump(2) << '\n';
  print_table({{"method", weighted ? "doubling" : "binary-search"},
               {"T*", show(x.t_star)},
               {"sum x", show(x.sum())},
               {"worst residual", show(r.worst())}});
  return r.worst() <= kLpTolerance ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------- round

struct RoundArgs {
  std::string file;
  std::string alg = "pipage";
  long trials = 1;
  std::string csv;
  double boost = 0.0;
};

int cmd_round(const RoundArgs& a, uint64_t seed) {
  const auto alg = parse_rounding(a.alg);
  if (!alg) throw InputError("unknown rounding '" + a.alg + "' (independent, pipage, lll)");
  if (a.trials < 1) throw InputError("--trials must be >= 1");
  const Instance original = read_instance(a.file).instance;
  const bool weighted = !original.unit_weights();
  if (weighted && *alg == RoundingAlgorithm::kIndependent) {
    throw InputError("independent rounding supports unit weights only");
  }

  // Weighted inputs are rounded on the normalized instance; statistics are
  // reported against the original ids and units.
  Instance work = original;
  FractionalSolution x;
  std::vector<int> ids(static_cast<size_t>(original.n_candidates));
  for (int v = 0; v < original.n_candidates; ++v) ids[static_cast<size_t>(v)] = v;
  double scale = 1.0;
  if (weighted) {
    const FractionalSolution raw = doubling(original);
    if (raw.t_star == 0.0) throw InputError("optimum is 0; nothing to round");
    auto [normalized, point] = normalize(original, raw.t_star, raw);
    work = normalized.instance;
    ids = normalized.original_ids;
    scale = normalized.scale;
    x = point;
  } else {
    x = guess_tstar_unweighted(original);
  }

  const TrialStats stats = run_trials(*alg, work, x, seed_range(seed, a.trials), weighted,
                                      true, LllOptions{a.boost, -1});

  std::ostringstream csv;
  csv << "candidate,x,frequency,contribution\n";
  for (size_t i = 0; i < ids.size(); ++i) {
    csv << ids[i] << ',' << format_number(x.x[i]) << ',' << format_number(stats.frequency[i])
        << ',' << format_number(stats.contribution[i] * scale) << '\n';
  }
  csv << "\nu,v,joint,product\n";
  for (size_t i = 0; i < ids.size(); ++i) {
    for (size_t j = i + 1; j < ids.size(); ++j) {
      csv << ids[i] << ',' << ids[j] << ',' << format_number(stats.joint[i][j]) << ','
          << format_number(stats.frequency[i] * stats.frequency[j]) << '\n';
    }
  }
  if (!a.csv.empty()) write_text(a.csv, csv.str());

  double worst = 0.0, total = 0.0;
  for (double v : stats.values) {
    worst = std::max(worst, v * scale);
    total += v * scale;
  }
  const double mean = total / static_cast<double>(stats.trials);
  json summary = {{"instance", instance_summary(original)},
                  {"algorithm", to_string(*alg)},
                  {"seed", seed},
                  {"trials", stats.trials},
                  {"t_star", number(x.t_star * scale)},
                  {"feasible_rate", stats.feasible_rate},
                  {"mean_value", mean},
                  {"max_value", number(worst)}};
  std::cout << summary.dump(2) << '\n';
  print_table({{"algorithm", to_string(*alg)},
               {"trials", std::to_string(stats.trials)},
               {"feasible rate", show(stats.feasible_rate)},
               {"mean value", show(mean)},
               {"max value", show(worst)},
               {"csv", a.csv.empty() ? "(not written)" : a.csv}});
  return kExitOk;
}

// --------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  long trials = -1;
  int max_m = 12;
  std::string csv;
};

int cmd_verify(const VerifyArgs& a, uint64_t seed) {
  std::vector<std::string> names;
  if (a.suite == "all") {
    names = suite_names();
  } else if (std::find(suite_names().begin(), suite_names().end(), a.suite) != suite_names().end()) {
    names = {a.suite};
  } else {
    std::string known;
    for (const auto& n : suite_names()) known += " " + n;
    throw InputError("unknown suite '" + a.suite + "'; known: all" + known);
  }
  if (a.max_m < 1 || a.max_m > kOracleMaxCandidates) {
    throw InputError("--max-m must lie in [1, " + std::to_string(kOracleMaxCandidates) + "]");
  }
  VerifyOptions options;
  options.trials = a.trials;
  options.max_m = a.max_m;
  options.seed = seed;

  json out = json::array();
  std::ostringstream csv;
  csv << kCsvHeader << '\n';
  bool all_passed = true;
  for (const auto& name : names) {
    const SuiteReport report = run_suite(name, options);
    all_passed = all_passed && report.passed();
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      std::cerr << (c.passed ? "  ok    " : "  FAIL  ") << name << ": " << c.name << " ("
                << c.detail << ")\n";
    }
    std::cerr << (report.passed() ? "PASS " : "FAIL ") << name << " ("
              << show(report.seconds) << " s)\n";
    out.push_back({{"suite", name},
                   {"passed", report.passed()},
                   {"seconds", report.seconds},
                   {"rows", report.rows.size()},
                   {"checks", checks}});
    for (const auto& row : report.rows) csv << csv_row(row) << '\n';
  }
  if (!a.csv.empty()) write_text(a.csv, csv.str());
  std::cout << json{{"passed", all_passed}, {"suites", out}}.dump(2) << '\n';
  return all_passed ? kExitOk : kExitVerify;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string families = "gap2,random-unit,path-cycle";
  std::string algs = "lll,pipage";
  long seeds = 5;
  int n = 8;
  int m = 10;
  int delta = 3;
  int k = 3;
  int oracle_max = 16;
  bool timing = false;
  std::string out;
};

struct BenchCase {
  Instance instance;
  std::optional<LaminarFamily> family;
};

BenchCase bench_instance(const std::string& family, const BenchArgs& a, uint64_t seed) {
  if (family == "gap2") return {gen_gap_instance(2), {}};
  if (family == "gap3") return {gen_gap_instance(3), {}};
  if (family == "random-unit") {
    return {gen_random_bipartite(a.n, a.m, a.delta, a.k, WeightSpec::unit(), seed), {}};
  }
  if (family == "random-weighted") {
    return {gen_random_bipartite(a.n, a.m, a.delta, a.k, WeightSpec::integer(0, 9), seed), {}};
  }
  if (family == "laminar") {
    LaminarFamily f = gen_random_laminar(a.n, a.m, WeightSpec::integer(1, 9), seed, a.k);
    Instance flat = flatten(f);
    return {std::move(flat), std::move(f)};
  }
  if (family == "path-cycle") {
    const int half = a.m / 2;
    return {gen_path_cycle({{ComponentSpec::Kind::kPath, half},
                            {ComponentSpec::Kind::kCycle, a.m - half}},
                           a.k, WeightSpec::integer(1, 5), seed),
            {}};
  }
  throw InputError("unknown bench family '" + family +
                   "' (gap2, gap3, random-unit, random-weighted, laminar, path-cycle)");
}

int cmd_bench(const BenchArgs& a, uint64_t seed) {
  const auto families = split(a.families, ',');
  std::vector<Algorithm> algs;
  for (const auto& name : split(a.algs, ',')) {
    const auto alg = parse_algorithm(name);
    if (!alg) throw InputError("unknown algorithm '" + name + "'");
    algs.push_back(*alg);
  }
  if (families.empty() || algs.empty()) throw InputError("empty families or algorithms");
  if (a.seeds < 1) throw InputError("--seeds must be >= 1");
  for (const auto& family : families) bench_instance(family, a, seed);  // reject unknown names early

  using Key = std::tuple<std::string, std::string, uint64_t>;
  std::map<Key, Measurement> rows;
  long errors = 0;
  for (const auto& family : families) {
    for (long i = 0; i < a.seeds; ++i) {
      const uint64_t run_seed = seed + static_cast<uint64_t>(i);
      std::optional<BenchCase> bench_case;
      double oracle = kNoValue;
      std::string failure;
      try {
        bench_case = bench_instance(family, a, run_seed);
        if (bench_case->instance.n_candidates <= a.oracle_max) {
          oracle = brute_force_opt(bench_case->instance, true).value;
        }
      } catch (const std::exception& e) {
        failure = e.what();
      }
      for (Algorithm alg : algs) {
        Measurement row;
        row.family = family;
        row.alg = to_string(alg);
        row.seed = run_seed;
        row.oracle = oracle;
        if (!bench_case) {
          row.feasible = false;
          ++errors;
          std::cerr << "error " << family << '/' << row.alg << '/' << run_seed << ": " << failure
                    << '\n';
          rows[{family, row.alg, run_seed}] = row;
          continue;
        }
        const Instance& instance = bench_case->instance;
        row = internal::measure(family, instance, to_string(alg), run_seed);
        row.oracle = oracle;
        try {
          Rng rng(run_seed);
          const auto start = std::chrono::steady_clock::now();
          const SolveOutcome out = solve(instance, alg, rng,
                                         bench_case->family ? &*bench_case->family : nullptr);
          const auto stop = std::chrono::steady_clock::now();
          row.value = max_disagreement(instance, out.selection.chosen);
          row.feasible = out.feasible(instance);
          if (a.timing) row.millis = std::chrono::duration<double, std::milli>(stop - start).count();
        } catch (const std::exception& e) {
          row.feasible = false;
          ++errors;
          std::cerr << "error " << family << '/' << row.alg << '/' << run_seed << ": " << e.what()
                    << '\n';
        }
        rows[{family, row.alg, run_seed}] = row;
      }
    }
  }

  std::ostringstream csv;
  csv << kCsvHeader << '\n';
  for (const auto& [key, row] : rows) csv << csv_row(row) << '\n';
  write_text(a.out, csv.str());
  print_table({{"rows", std::to_string(rows.size())},
               {"errors", std::to_string(errors)},
               {"output", a.out.empty() ? "stdout" : a.out}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair k-set selection: exact solvers, LP rounding, generators, verification"};
  app.require_subcommand(1);
  app.fallthrough();
  uint64_t seed = 0;
  app.add_option("--seed", seed, "Random seed (default 0)");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance as JSON");
  gen_cmd->add_option("--family", gen.family,
                      "gap | incidence | random-bipartite | random-laminar | path-cycle")
      ->required();
  gen_cmd->add_option("--k", gen.k, "Demand (laminar: 0 draws it)");
  gen_cmd->add_option("--n", gen.n, "Agents (laminar: elements)");
  gen_cmd->add_option("--m", gen.m, "Candidates (laminar: sets)");
  gen_cmd->add_option("--delta", gen.delta, "Maximum degree");
  gen_cmd->add_option("--vertices", gen.vertices, "Incidence: graph vertices");
  gen_cmd->add_option("--edges", gen.edges, "Incidence: edges as 0-1,1-2");
  gen_cmd->add_option("--components", gen.components, "Path-cycle: path:3,cycle:4");
  gen_cmd->add_option("--weights", gen.weights, "unit | int:LO:HI | real:LO:HI");
  gen_cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance and report");
  solve_cmd->add_option("file", solve_args.file, "Instance JSON")->required();
  solve_cmd->add_option("--alg", solve_args.alg,
                        "auto | delta2 | laminar | oracle | lll | pipage | independent");
  solve_cmd->add_option("--oracle-max", solve_args.oracle_max,
                        "Run the brute-force oracle up to this many candidates");
  solve_cmd->add_option("--boost", solve_args.boost, "LLL probability constant (default 4 ln(2eD^2))");
  solve_cmd->add_option("--max-resamples", solve_args.max_resamples,
                        "Moser-Tardos resample budget (default automatic)");

  LpArgs lp_args;
  auto* lp_cmd = app.add_subcommand("lp", "Solve the relaxation and print T*, x and residuals");
  lp_cmd->add_option("file", lp_args.file, "Instance JSON")->required();
  lp_cmd->add_option("--t", lp_args.t, "Only test feasibility at this threshold");
  lp_cmd->add_flag("--restrict-heavy", lp_args.restrict_heavy,
                   "Drop candidates heavier than the threshold");

  RoundArgs round_args;
  auto* round_cmd = app.add_subcommand("round", "Repeated rounding with empirical statistics");
  round_cmd->add_option("file", round_args.file, "Instance JSON")->required();
  round_cmd->add_option("--alg", round_args.alg, "independent | pipage | lll");
  round_cmd->add_option("--trials", round_args.trials, "Number of seeded runs");
  round_cmd->add_option("--csv", round_args.csv, "Per-candidate and pair statistics CSV");
  round_cmd->add_option("--boost", round_args.boost, "LLL probability constant");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", verify_args.suite,
                         "all | exact-vs-oracle | marginals | negcorr | ratio-bounds | gap | "
                         "lower-bound | independent | reduction")
      ->required();
  verify_cmd->add_option("--trials", verify_args.trials, "Instances or runs (suite default)");
  verify_cmd->add_option("--max-m", verify_args.max_m, "Largest candidate count");
  verify_cmd->add_option("--csv", verify_args.csv, "Write all measurements as CSV");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Run a family x algorithm x seed grid");
  bench_cmd->add_option("--families", bench_args.families,
                        "gap2,gap3,random-unit,random-weighted,laminar,path-cycle");
  bench_cmd->add_option("--algs", bench_args.algs, "Comma-separated algorithms");
  bench_cmd->add_option("--seeds", bench_args.seeds, "Seeds per family, starting at --seed");
  bench_cmd->add_option("--n", bench_args.n, "Agents (laminar: elements)");
  bench_cmd->add_option("--m", bench_args.m, "Candidates (laminar: sets)");
  bench_cmd->add_option("--delta", bench_args.delta, "Maximum degree");
  bench_cmd->add_option("--k", bench_args.k, "Demand");
  bench_cmd->add_option("--oracle-max", bench_args.oracle_max,
                        "Run the oracle up to this many candidates");
  bench_cmd->add_flag("--timing", bench_args.timing, "Record wall time in the millis column");
  bench_cmd->add_option("--out", bench_args.out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, seed);
    if (solve_cmd->parsed()) return cmd_solve(solve_args, seed);
    if (lp_cmd->parsed()) return cmd_lp(lp_args);
    if (round_cmd->parsed()) return cmd_round(round_args, seed);
    if (verify_cmd->parsed()) return cmd_verify(verify_args, seed);
    if (bench_cmd->parsed()) return cmd_bench(bench_args, seed);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolver;
  }
  return kExitInput;
}
