// src/core/pca.h

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

#ifndef LFSPEECH_CORE_PCA_H_
#define LFSPEECH_CORE_PCA_H_

#include <Eigen/Dense>

namespace lfs {

struct PcaBasis {
  Eigen::VectorXd mean;
  // One orthonormal direction per row, by descending eigenvalue. The
  // largest-magnitude coordinate of each direction is positive.
  Eigen::MatrixXd components;
  // Every eigenvalue of the sample covariance (N - 1 normalization),
  // descending; the first rows(components) belong to the kept directions.
  Eigen::VectorXd eigenvalues;
  Eigen::VectorXd explained_variance_ratio;  // per kept direction
};

// Requires N >= 2 and 1 <= components <= min(N, D).
PcaBasis PcaFit(const Eigen::MatrixXd &x, int components);

// Centered projection, N x components.
Eigen::MatrixXd PcaTransform(const PcaBasis &basis, const Eigen::MatrixXd &x);

// Back to the input space from projected coordinates.
Eigen::MatrixXd PcaReconstruct(const PcaBasis &basis, const Eigen::MatrixXd &z);

}  // namespace lfs

#endif  // LFSPEECH_CORE_PCA_H_
