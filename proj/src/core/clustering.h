// src/core/clustering.h

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

#ifndef LFSPEECH_CORE_CLUSTERING_H_
#define LFSPEECH_CORE_CLUSTERING_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "core/cluster-result.h"
#include "core/gmm.h"
#include "json.hpp"

namespace lfs {

enum class ClusterMethod { kAhc, kKMeans, kGmm, kOvercluster };

const char *ClusterMethodName(ClusterMethod method);
ClusterMethod ParseClusterMethod(std::string_view name);

struct ClusterOptions {
  ClusterMethod method = ClusterMethod::kAhc;
  double tau = 0.65;
  int32_t min_cluster_size = 20;
  // Applied before k-means and GMM only; capped at min(N, D). 0 disables.
  int32_t pca_components = 64;
  // 0 estimates k: silhouette for k-means, the information criterion for GMM.
  int32_t num_clusters = 0;
  int32_t k_min = 1;
  int32_t k_max = 10;
  InformationCriterion criterion = InformationCriterion::kAic;
  int32_t restarts = 3;
  int32_t overcluster_k = 25;
  // 0 picks the method default: 5 for over-clustering, none otherwise.
  int32_t smoothing_window = 0;
  uint64_t seed = 0;
};

void Validate(const ClusterOptions &options);

// Clusters time-ordered rows of x. Centroids are always reported in the
// input space as per-label means.
ClusterResult ClusterEmbeddings(const Eigen::MatrixXd &x,
                                const ClusterOptions &options);

nlohmann::ordered_json ClusterOptionsToJson(const ClusterOptions &options);
nlohmann::ordered_json ClusterResultToJson(const ClusterResult &result);

}  // namespace lfs

#endif  // LFSPEECH_CORE_CLUSTERING_H_
