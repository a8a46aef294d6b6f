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

// Runs the seven acceptance criteria at their stated sizes and tolerances
// and prints one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria.

#include <cstdio>
#include <string>
#include <vector>

#include "fkss/verify.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
  std::vector<std::string> suites;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exact solvers equal the oracle", {"exact-vs-oracle"}},
      {2, "gap instances have OPT = k and T* = 1", {"gap"}},
      {3, "pipage size, sum, marginals, negative correlation", {"marginals", "negcorr"}},
      {4, "lll feasibility, bounds and resample budget", {"ratio-bounds"}},
      {5, "relaxation lower bounds and residuals", {"lower-bound"}},
      {6, "independent rounding demand and value rates", {"independent"}},
      {7, "incidence value-1 feasibility matches independent sets", {"reduction"}},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    bool ok = true;
    double seconds = 0.0;
    std::vector<std::string> details;
    for (const std::string& suite : c.suites) {
      try {
        const fkss::SuiteReport report = fkss::run_suite(suite, fkss::VerifyOptions{});
        ok = ok && report.passed();
        seconds += report.seconds;
        for (const auto& check : report.checks) {
          details.push_back(std::string(check.passed ? "  ok   " : "  FAIL ") + suite + ": " +
                            check.name + " (" + check.detail + ")");
        }
      } catch (const std::exception& e) {
        ok = false;
        details.push_back("  FAIL " + suite + ": exception: " + e.what());
      }
    }
    std::printf("[%s] criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", c.id, c.title, seconds);
    for (const auto& line : details) std::printf("%s\n", line.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed;
}
