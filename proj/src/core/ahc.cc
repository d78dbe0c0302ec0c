// src/core/ahc.cc

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

#include "core/ahc.h"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "core/error.h"

namespace lfs {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Active clusters are indexed by the smallest row they contain. Each keeps
// its vector sum (same direction as its centroid) and a cached nearest
// neighbour; only rows pointing at a merged cluster need a full rescan.
class CentroidMerger {
 public:
  explicit CentroidMerger(const Eigen::MatrixXd &x)
      : sums_(x.transpose()),
        counts_(x.rows(), 1),
        active_(x.rows(), true),
        owner_(x.rows()),
        nn_(x.rows(), -1),
        nn_dist_(x.rows(), kInf) {
    for (Eigen::Index i = 0; i < x.rows(); ++i) owner_[i] = i;
    for (Eigen::Index i = 0; i < x.rows(); ++i) Refresh(i);
  }

  int64_t Run(double tau) {
    int64_t merges = 0;
    const Eigen::Index n = sums_.cols();
    while (true) {
      Eigen::Index a = -1;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (active_[i] && nn_[i] >= 0 && (a < 0 || nn_dist_[i] < nn_dist_[a])) {
          a = i;
        }
      }
      if (a < 0 || !(nn_dist_[a] < tau)) break;
      Eigen::Index b = nn_[a];
      if (b < a) std::swap(a, b);

      sums_.col(a) += sums_.col(b);
      counts_[a] += counts_[b];
      active_[b] = false;
      for (auto &o : owner_) {
        if (o == b) o = a;
      }
      ++merges;

      Refresh(a);
      for (Eigen::Index c = 0; c < n; ++c) {
        if (!active_[c] || c == a) continue;
        if (nn_[c] == a || nn_[c] == b) {
          Refresh(c);
        } else {
          const double d = Distance(c, a);
          if (d < nn_dist_[c] || (d == nn_dist_[c] && a < nn_[c])) {
            nn_[c] = a;
            nn_dist_[c] = d;
          }
        }
      }
    }
    return merges;
  }

  const Eigen::MatrixXd &sums() const { return sums_; }
  const std::vector<int64_t> &counts() const { return counts_; }
  const std::vector<bool> &active() const { return active_; }
  const std::vector<Eigen::Index> &owner() const { return owner_; }

 private:
  double Distance(Eigen::Index i, Eigen::Index j) const {
    return CosineDistance(sums_.col(i), sums_.col(j));
  }

  void Refresh(Eigen::Index i) {
    nn_[i] = -1;
    nn_dist_[i] = kInf;
    for (Eigen::Index j = 0; j < sums_.cols(); ++j) {
      if (j == i || !active_[j]) continue;
      const double d = Distance(i, j);
      if (nn_[i] < 0 || d < nn_dist_[i]) {
        nn_[i] = j;
        nn_dist_[i] = d;
      }
    }
  }

  Eigen::MatrixXd sums_;
  std::vector<int64_t> counts_;
  std::vector<bool> active_;
  std::vector<Eigen::Index> owner_;  // row -> cluster id
  std::vector<Eigen::Index> nn_;
  std::vector<double> nn_dist_;
};

}  // namespace

ClusterResult AhcCentroid(const Eigen::MatrixXd &x, double tau,
                          int32_t min_cluster_size) {
  if (!(tau > 0.0)) {
    ThrowParameter("AHC threshold must be positive, got " + std::to_string(tau));
  }
  ClusterResult result;
  result.method = "ahc-centroid";
  const Eigen::Index n = x.rows();
  if (n == 0) {
    result.centroids.resize(0, x.cols());
    return result;
  }

  CentroidMerger merger(x);
  const int64_t merges = merger.Run(tau);

  std::vector<Eigen::Index> survivors;
  Eigen::Index largest = -1;
  int64_t clusters_after_merge = 0;
  for (Eigen::Index c = 0; c < n; ++c) {
    if (!merger.active()[c]) continue;
    ++clusters_after_merge;
    if (merger.counts()[c] >= min_cluster_size) survivors.push_back(c);
    if (largest < 0 || merger.counts()[c] > merger.counts()[largest]) largest = c;
  }
  if (survivors.empty()) survivors.push_back(largest);

  std::vector<int32_t> raw(n);
  std::vector<bool> surviving(n, false);
  for (Eigen::Index c : survivors) surviving[c] = true;
  int64_t reassigned = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index target = merger.owner()[i];
    if (!surviving[target]) {
      double best = kInf;
      for (Eigen::Index c : survivors) {
        const double d = CosineDistance(x.row(i).transpose(), merger.sums().col(c));
        if (d < best) {
          best = d;
          target = c;
        }
      }
      ++reassigned;
    }
    raw[i] = static_cast<int32_t>(target);
  }

  result.labels = RelabelByFirstAppearance(raw, &result.k);
  result.centroids = ClusterMeans(x, result.labels, result.k);
  result.diagnostics["tau"] = tau;
  result.diagnostics["min_cluster_size"] = min_cluster_size;
  result.diagnostics["merges"] = merges;
  result.diagnostics["clusters_after_merge"] = clusters_after_merge;
  result.diagnostics["dissolved_clusters"] =
      clusters_after_merge - static_cast<int64_t>(survivors.size());
  result.diagnostics["reassigned_points"] = reassigned;
  return result;
}

}  // namespace lfs
