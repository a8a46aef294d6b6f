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

// Pipage rounding for a single cardinality constraint. Each step moves mass
// between two fractional coordinates so that one of them becomes integral,
// keeping the sum fixed and every marginal unchanged in expectation.

#ifndef FKSS_ROUNDING_PIPAGE_HPP_
#define FKSS_ROUNDING_PIPAGE_HPP_

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "fkss/core.hpp"
#include "fkss/rng.hpp"

namespace fkss {

inline constexpr double kFractionalTolerance = 1e-9;

struct PipageTrace {
  int iterations = 0;
  std::vector<double> sums;  // sum of x after each step, first entry is the input
};

namespace internal {

inline bool is_fractional(double value) {
  return value > kFractionalTolerance && value < 1.0 - kFractionalTolerance;
}

inline double plain_sum(const std::vector<double>& x) {
  double total = 0.0;
  for (double v : x) total += v;
  return total;
}

}  // namespace internal

// Rounds x (summing to k) to exactly k ids, returned sorted.
inline std::vector<int> pipage_rounding(std::vector<double> x, int k, Rng& rng,
                                        PipageTrace* trace = nullptr) {
  for (double v : x) {
    if (!(v >= -kFractionalTolerance && v <= 1.0 + kFractionalTolerance)) {
      throw InputError("pipage: coordinate outside [0, 1]");
    }
  }
  const double tolerance = kFractionalTolerance * std::max(1, k);
  const double start = internal::plain_sum(x);
  if (std::abs(start - k) > tolerance) {
    std::ostringstream out;
    out << "pipage: sum of x is " << start << ", expected " << k << " (trim first)";
    throw InputError(out.str());
  }
  if (trace) {
    *trace = PipageTrace{};
    trace->sums.push_back(start);
  }

  const size_t m = x.size();
  size_t scan = 0;  // every index below `scan` is integral
  while (true) {
    while (scan < m && !internal::is_fractional(x[scan])) ++scan;
    if (scan == m) break;
    size_t other = scan + 1;
    while (other < m && !internal::is_fractional(x[other])) ++other;
    if (other == m) throw SolverError("pipage: a single fractional coordinate remains");

    double& xu = x[scan];
    double& xv = x[other];
    const double up = std::min(xu, 1.0 - xv);    // shift from u to v
    const double down = std::min(1.0 - xu, xv);  // shift from v to u
    if (rng.bernoulli(down / (up + down))) {
      const bool u_hits_zero = up == xu;
      xu -= up;
      xv += up;
      if (u_hits_zero) {
        xu = 0.0;
      } else {
        xv = 1.0;
      }
    } else {
      const bool u_hits_one = down == 1.0 - xu;
      xu += down;
      xv -= down;
      if (u_hits_one) {
        xu = 1.0;
      } else {
        xv = 0.0;
      }
    }

    const double now = internal::plain_sum(x);
    if (std::abs(now - start) > tolerance) {
      throw SolverError("pipage: sum drifted during rounding");
    }
    if (trace) {
      ++trace->iterations;
      trace->sums.push_back(now);
    }
  }

  std::vector<int> chosen;
  for (size_t v = 0; v < m; ++v) {
    if (x[v] > 0.5) chosen.push_back(static_cast<int>(v));
  }
  if (static_cast<int>(chosen.size()) != k) {
    throw SolverError("pipage: rounded to " + std::to_string(chosen.size()) +
                      " vertices instead of " + std::to_string(k));
  }
  return chosen;
}

}  // namespace fkss

#endif  // FKSS_ROUNDING_PIPAGE_HPP_
