// src/core/cluster-result.cc

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

#include "core/cluster-result.h"

#include <algorithm>
#include <map>

#include "core/error.h"

namespace lfs {

std::vector<int32_t> RelabelByFirstAppearance(std::span<const int32_t> labels,
                                              int32_t *num_clusters) {
  std::map<int32_t, int32_t> remap;
  std::vector<int32_t> out;
  out.reserve(labels.size());
  for (int32_t l : labels) {
    auto it = remap.find(l);
    if (it == remap.end()) {
      it = remap.emplace(l, static_cast<int32_t>(remap.size())).first;
    }
    out.push_back(it->second);
  }
  if (num_clusters != nullptr) *num_clusters = static_cast<int32_t>(remap.size());
  return out;
}

Eigen::MatrixXd ClusterMeans(const Eigen::MatrixXd &x,
                             std::span<const int32_t> labels, int32_t k) {
  Eigen::MatrixXd means = Eigen::MatrixXd::Zero(k, x.cols());
  std::vector<int64_t> counts(k, 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] >= k) {
      ThrowStructural("label out of range: " + std::to_string(labels[i]));
    }
    means.row(labels[i]) += x.row(static_cast<Eigen::Index>(i));
    ++counts[labels[i]];
  }
  for (int32_t c = 0; c < k; ++c) {
    if (counts[c] > 0) means.row(c) /= static_cast<double>(counts[c]);
  }
  return means;
}

double CosineDistance(const Eigen::Ref<const Eigen::VectorXd> &a,
                      const Eigen::Ref<const Eigen::VectorXd> &b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return (na == 0.0 && nb == 0.0) ? 0.0 : 1.0;
  return std::clamp(1.0 - a.dot(b) / (na * nb), 0.0, 2.0);
}

}  // namespace lfs
