// src/core/assignment.cc

// Copyright 2026  lfspeech contributors

// See ../../COPYING for clarification regarding multiple authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "core/assignment.h"

#include <algorithm>
#include <limits>

#include "core/error.h"

namespace lfs {

std::vector<int32_t> OptimalAssignment(const Eigen::MatrixXd &cost) {
  const int32_t rows = static_cast<int32_t>(cost.rows());
  const int32_t cols = static_cast<int32_t>(cost.cols());
  if (!cost.allFinite()) ThrowParameter("assignment costs must be finite");
  const int32_t n = std::max(rows, cols);
  if (n == 0) return {};
  auto c = [&](int32_t i, int32_t j) {
    return i < rows && j < cols ? cost(i, j) : 0.0;
  };

  // 1-based arrays; p[j] is the row matched to column j.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int32_t> p(n + 1, 0), way(n + 1, 0);
  for (int32_t i = 1; i <= n; ++i) {
    p[0] = i;
    int32_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int32_t i0 = p[j0];
      double delta = inf;
      int32_t j1 = 0;
      for (int32_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = c(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int32_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int32_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int32_t> assignment(rows, -1);
  for (int32_t j = 1; j <= n; ++j) {
    const int32_t i = p[j] - 1;
    if (i < rows && j - 1 < cols) assignment[i] = j - 1;
  }
  return assignment;
}

double AssignmentCost(const Eigen::MatrixXd &cost,
                      const std::vector<int32_t> &assignment) {
  double total = 0.0;
  for (size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] >= 0) total += cost(static_cast<Eigen::Index>(i), assignment[i]);
  }
  return total;
}

}  // namespace lfs
