// src/core/kmeans.h

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

#ifndef LFSPEECH_CORE_KMEANS_H_
#define LFSPEECH_CORE_KMEANS_H_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "core/cluster-result.h"

namespace lfs {

struct KMeansOptions {
  int32_t max_iterations = 300;
  double tolerance = 1e-6;  // largest centroid shift
};

// Lloyd's algorithm in Euclidean space with k-means++ seeding. Fully
// determined by seed. Diagnostics carry "inertia", "iterations" and the
// per-iteration "inertia_history".
ClusterResult KMeans(const Eigen::MatrixXd &x, int32_t k, uint64_t seed,
                     const KMeansOptions &options = {});

// Mean silhouette under cosine distance; points alone in their cluster
// contribute 0. Requires at least two non-empty clusters.
double SilhouetteScore(const Eigen::MatrixXd &x,
                       std::span<const int32_t> labels);

struct SilhouetteSweep {
  int32_t best_k = 0;
  std::vector<std::pair<int32_t, double>> scores;
};

// k-means for every k in [k_min, k_max]; the highest silhouette wins, ties
// going to the smaller k. Requires 2 <= k_min <= k_max <= N - 1.
SilhouetteSweep EstimateKSilhouette(const Eigen::MatrixXd &x, int32_t k_min,
                                    int32_t k_max, uint64_t seed);

}  // namespace lfs

#endif  // LFSPEECH_CORE_KMEANS_H_
