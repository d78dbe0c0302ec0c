// src/core/kmeans.cc

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

#include "core/kmeans.h"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "core/error.h"

namespace lfs {
namespace {

Eigen::MatrixXd PlusPlusSeeds(const Eigen::MatrixXd &x, int32_t k,
                              uint64_t seed) {
  const Eigen::Index n = x.rows();
  SeededUniform uniform(seed);
  Eigen::MatrixXd centers(k, x.cols());
  std::vector<bool> chosen(n, false);
  Eigen::Index first = std::min<Eigen::Index>(
      static_cast<Eigen::Index>(uniform.Next() * n), n - 1);
  centers.row(0) = x.row(first);
  chosen[first] = true;
  Eigen::VectorXd d2 = (x.rowwise() - x.row(first)).rowwise().squaredNorm();
  for (int32_t c = 1; c < k; ++c) {
    const double total = d2.sum();
    Eigen::Index pick = -1;
    if (total > 0.0) {
      const double target = uniform.Next() * total;
      double acc = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        acc += d2[i];
        if (d2[i] > 0.0 && acc > target) {
          pick = i;
          break;
        }
      }
      if (pick < 0) {
        for (Eigen::Index i = n - 1; i >= 0; --i) {
          if (d2[i] > 0.0) {
            pick = i;
            break;
          }
        }
      }
    } else {
      // Every remaining point coincides with a center.
      for (Eigen::Index i = 0; i < n; ++i) {
        if (!chosen[i]) {
          pick = i;
          break;
        }
      }
    }
    chosen[pick] = true;
    centers.row(c) = x.row(pick);
    d2 = d2.cwiseMin((x.rowwise() - x.row(pick)).rowwise().squaredNorm());
  }
  return centers;
}

double Assign(const Eigen::MatrixXd &x, const Eigen::MatrixXd &centers,
              std::vector<int32_t> *labels, Eigen::VectorXd *cost) {
  double inertia = 0.0;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    Eigen::Index best = 0;
    const double d = (centers.rowwise() - x.row(i)).rowwise().squaredNorm().minCoeff(&best);
    (*labels)[i] = static_cast<int32_t>(best);
    (*cost)[i] = d;
    inertia += d;
  }
  return inertia;
}

}  // namespace

ClusterResult KMeans(const Eigen::MatrixXd &x, int32_t k, uint64_t seed,
                     const KMeansOptions &options) {
  const Eigen::Index n = x.rows();
  if (k < 1 || k > n) {
    ThrowParameter("k-means needs 1 <= k <= N, got k=" + std::to_string(k) +
                   " with N=" + std::to_string(n));
  }
  Eigen::MatrixXd centers = PlusPlusSeeds(x, k, seed);
  std::vector<int32_t> labels(n, 0);
  Eigen::VectorXd cost(n);
  std::vector<double> history;
  int32_t iterations = 0;
  for (; iterations < options.max_iterations; ++iterations) {
    history.push_back(Assign(x, centers, &labels, &cost));

    std::vector<int64_t> counts(k, 0);
    for (int32_t l : labels) ++counts[l];
    for (int32_t c = 0; c < k; ++c) {
      if (counts[c] > 0) continue;
      // Re-seed an empty cluster with the worst-served point.
      Eigen::Index worst = 0;
      double worst_cost = -1.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (counts[labels[i]] > 1 && cost[i] > worst_cost) {
          worst = i;
          worst_cost = cost[i];
        }
      }
      --counts[labels[worst]];
      labels[worst] = c;
      counts[c] = 1;
      cost[worst] = 0.0;
    }

    const Eigen::MatrixXd updated = ClusterMeans(x, labels, k);
    const double shift = (updated - centers).rowwise().norm().maxCoeff();
    centers = updated;
    if (shift < options.tolerance) {
      ++iterations;
      break;
    }
  }

  ClusterResult result;
  result.method = "kmeans";
  result.k = k;
  result.labels = std::move(labels);
  result.centroids = std::move(centers);
  double inertia = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    inertia += (x.row(i) - result.centroids.row(result.labels[i])).squaredNorm();
  }
  result.diagnostics["seed"] = seed;
  result.diagnostics["iterations"] = iterations;
  result.diagnostics["inertia"] = inertia;
  result.diagnostics["inertia_history"] = history;
  return result;
}

double SilhouetteScore(const Eigen::MatrixXd &x,
                       std::span<const int32_t> labels) {
  const Eigen::Index n = x.rows();
  if (static_cast<Eigen::Index>(labels.size()) != n) {
    ThrowStructural("silhouette: label count does not match rows");
  }
  const std::set<int32_t> distinct(labels.begin(), labels.end());
  if (distinct.size() < 2) {
    ThrowParameter("silhouette needs at least two clusters");
  }
  if (*distinct.begin() < 0) ThrowParameter("negative cluster label");
  const int32_t k = *distinct.rbegin() + 1;
  std::vector<int64_t> sizes(k, 0);
  for (int32_t l : labels) ++sizes[l];

  double total = 0.0;
  std::vector<double> sum_to(k);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (sizes[labels[i]] <= 1) continue;
    std::fill(sum_to.begin(), sum_to.end(), 0.0);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i) continue;
      sum_to[labels[j]] += CosineDistance(x.row(i).transpose(), x.row(j).transpose());
    }
    const double a = sum_to[labels[i]] / static_cast<double>(sizes[labels[i]] - 1);
    double b = std::numeric_limits<double>::infinity();
    for (int32_t c = 0; c < k; ++c) {
      if (c == labels[i] || sizes[c] == 0) continue;
      b = std::min(b, sum_to[c] / static_cast<double>(sizes[c]));
    }
    const double denom = std::max(a, b);
    total += denom > 0.0 ? (b - a) / denom : 0.0;
  }
  return total / static_cast<double>(n);
}

SilhouetteSweep EstimateKSilhouette(const Eigen::MatrixXd &x, int32_t k_min,
                                    int32_t k_max, uint64_t seed) {
  const Eigen::Index n = x.rows();
  if (!(2 <= k_min && k_min <= k_max && k_max <= n - 1)) {
    ThrowParameter("silhouette sweep needs 2 <= k_min <= k_max <= N-1, got [" +
                   std::to_string(k_min) + ", " + std::to_string(k_max) +
                   "] with N=" + std::to_string(n));
  }
  SilhouetteSweep sweep;
  double best = -std::numeric_limits<double>::infinity();
  for (int32_t k = k_min; k <= k_max; ++k) {
    const ClusterResult r = KMeans(x, k, seed);
    const double s = SilhouetteScore(x, r.labels);
    sweep.scores.emplace_back(k, s);
    if (s > best) {
      best = s;
      sweep.best_k = k;
    }
  }
  return sweep;
}

}  // namespace lfs
