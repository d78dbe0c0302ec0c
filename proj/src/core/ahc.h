// src/core/ahc.h

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

#ifndef LFSPEECH_CORE_AHC_H_
#define LFSPEECH_CORE_AHC_H_

#include <cstdint>

#include <Eigen/Dense>

#include "core/cluster-result.h"

namespace lfs {

// Centroid-linkage agglomerative clustering under cosine distance.
//
// Starting from singletons, the two clusters whose centroids are closest
// are merged while that distance is below tau (ties go to the
// lexicographically smallest pair of cluster ids; the merged cluster keeps
// the smaller id). Once merging stops, clusters with fewer than
// min_cluster_size members are dissolved and each member moves to the
// nearest surviving centroid; when nothing survives, only the largest
// cluster is kept. Labels are numbered by first appearance along the rows.
ClusterResult AhcCentroid(const Eigen::MatrixXd &x, double tau,
                          int32_t min_cluster_size);

}  // namespace lfs

#endif  // LFSPEECH_CORE_AHC_H_
