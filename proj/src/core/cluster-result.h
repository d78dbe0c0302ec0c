// src/core/cluster-result.h

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

#ifndef LFSPEECH_CORE_CLUSTER_RESULT_H_
#define LFSPEECH_CORE_CLUSTER_RESULT_H_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

namespace lfs {

// Labels lie in [0, k) and every cluster is non-empty. Centroid row i is
// the mean of the input vectors labelled i.
struct ClusterResult {
  std::vector<int32_t> labels;
  int32_t k = 0;
  Eigen::MatrixXd centroids;
  std::string method;
  nlohmann::ordered_json diagnostics = nlohmann::ordered_json::object();
};

// Renumbers labels by first appearance, dropping unused ids.
std::vector<int32_t> RelabelByFirstAppearance(std::span<const int32_t> labels,
                                              int32_t *num_clusters = nullptr);

// Means of the rows of x grouped by label; labels must lie in [0, k).
Eigen::MatrixXd ClusterMeans(const Eigen::MatrixXd &x,
                             std::span<const int32_t> labels, int32_t k);

// 1 - cos(a, b). A zero vector is at distance 1 from anything non-zero and
// at distance 0 from another zero vector.
double CosineDistance(const Eigen::Ref<const Eigen::VectorXd> &a,
                      const Eigen::Ref<const Eigen::VectorXd> &b);

// Uniform draws in [0, 1). The engine's output sequence is fixed by the
// standard and the conversion is done by hand, so results do not depend on
// the standard library's distribution implementations.
class SeededUniform {
 public:
  explicit SeededUniform(uint64_t seed) : engine_(seed) {}
  double Next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lfs

#endif  // LFSPEECH_CORE_CLUSTER_RESULT_H_
