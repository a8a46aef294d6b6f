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

// Dense tableau simplex for   max c'x  s.t.  Ax <= b, x >= 0,  with b >= 0.
// The slack basis is feasible from the start, so no phase one is needed.
// Bland's rule keeps degenerate problems from cycling.

#ifndef FKSS_LP_SIMPLEX_HPP_
#define FKSS_LP_SIMPLEX_HPP_

#include <cmath>
#include <string>
#include <vector>

#include "fkss/core.hpp"

namespace fkss {

enum class LpStatus { kOptimal, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kOptimal;
  std::vector<double> x;
  double objective = 0.0;
  int pivots = 0;
};

inline constexpr double kPivotTolerance = 1e-11;

inline LpResult simplex_maximize(const std::vector<std::vector<double>>& a,
                                 const std::vector<double>& b,
                                 const std::vector<double>& c, int max_pivots = 0) {
  const size_t rows = a.size();
  const size_t cols = c.size();
  if (b.size() != rows) throw InputError("simplex: row count mismatch");
  for (size_t i = 0; i < rows; ++i) {
    if (a[i].size() != cols) throw InputError("simplex: ragged constraint matrix");
    if (!(b[i] >= 0.0)) throw InputError("simplex: right-hand side must be >= 0");
  }
  const size_t width = cols + rows + 1;  // structural, slack, rhs
  if (max_pivots <= 0) max_pivots = 50 * static_cast<int>(rows + cols) + 100;

  std::vector<std::vector<double>> t(rows + 1, std::vector<double>(width, 0.0));
  std::vector<size_t> basis(rows);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) t[i][j] = a[i][j];
    t[i][cols + i] = 1.0;
    t[i][width - 1] = b[i];
    basis[i] = cols + i;
  }
  auto& obj = t[rows];  // reduced costs, stored negated
  for (size_t j = 0; j < cols; ++j) obj[j] = -c[j];

  LpResult result;
  while (true) {
    size_t enter = width;
    for (size_t j = 0; j + 1 < width; ++j) {
      if (obj[j] < -kPivotTolerance) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    size_t leave = rows;
    double best_ratio = 0.0;
    for (size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= kPivotTolerance) continue;
      const double ratio = t[i][width - 1] / t[i][enter];
      if (leave == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == rows) {
      result.status = LpStatus::kUnbounded;
      return result;
    }
    if (++result.pivots > max_pivots) {
      throw SolverError("simplex: pivot limit " + std::to_string(max_pivots) + " reached");
    }

    auto& pivot_row = t[leave];
    const double pivot = pivot_row[enter];
    for (double& value : pivot_row) value /= pivot;
    for (size_t i = 0; i <= rows; ++i) {
      if (i == leave) continue;
      const double factor = t[i][enter];
      if (factor == 0.0) continue;
      for (size_t j = 0; j < width; ++j) t[i][j] -= factor * pivot_row[j];
      t[i][enter] = 0.0;
    }
    basis[leave] = enter;
  }

  result.x.assign(cols, 0.0);
  for (size_t i = 0; i < rows; ++i) {
    if (basis[i] < cols) result.x[basis[i]] = t[i][width - 1];
  }
  result.objective = 0.0;
  for (size_t j = 0; j < cols; ++j) result.objective += c[j] * result.x[j];
  return result;
}

}  // namespace fkss

#endif  // FKSS_LP_SIMPLEX_HPP_
