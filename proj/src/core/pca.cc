// src/core/pca.cc

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

#include "core/pca.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "core/error.h"

namespace lfs {

PcaBasis PcaFit(const Eigen::MatrixXd &x, int components) {
  const Eigen::Index n = x.rows();
  const Eigen::Index d = x.cols();
  if (n < 2) ThrowParameter("PCA needs at least two rows");
  if (components < 1 || components > std::min(n, d)) {
    ThrowParameter("PCA components must lie in [1, min(N, D)] = [1, " +
                   std::to_string(std::min(n, d)) + "], got " +
                   std::to_string(components));
  }
  PcaBasis basis;
  basis.mean = x.colwise().mean().transpose();
  const Eigen::MatrixXd centered = x.rowwise() - basis.mean.transpose();
  const Eigen::MatrixXd cov =
      (centered.transpose() * centered) / static_cast<double>(n - 1);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) {
    ThrowParameter("covariance eigendecomposition did not converge");
  }
  // Eigen returns ascending order.
  std::vector<Eigen::Index> order(d);
  std::iota(order.begin(), order.end(), 0);
  const Eigen::VectorXd &values = solver.eigenvalues();
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) {
                     return values[a] > values[b];
                   });

  basis.eigenvalues.resize(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    basis.eigenvalues[i] = std::max(0.0, values[order[i]]);
  }
  const double total = basis.eigenvalues.sum();
  basis.components.resize(components, d);
  basis.explained_variance_ratio.resize(components);
  for (int c = 0; c < components; ++c) {
    Eigen::VectorXd v = solver.eigenvectors().col(order[c]);
    Eigen::Index pivot = 0;
    v.cwiseAbs().maxCoeff(&pivot);
    if (v[pivot] < 0.0) v = -v;
    basis.components.row(c) = v.transpose();
    basis.explained_variance_ratio[c] =
        total > 0.0 ? basis.eigenvalues[c] / total : 0.0;
  }
  return basis;
}

Eigen::MatrixXd PcaTransform(const PcaBasis &basis, const Eigen::MatrixXd &x) {
  if (x.cols() != basis.mean.size()) {
    ThrowStructural("PCA input has " + std::to_string(x.cols()) +
                    " columns, basis expects " +
                    std::to_string(basis.mean.size()));
  }
  return (x.rowwise() - basis.mean.transpose()) *
         basis.components.transpose();
}

Eigen::MatrixXd PcaReconstruct(const PcaBasis &basis, const Eigen::MatrixXd &z) {
  if (z.cols() != basis.components.rows()) {
    ThrowStructural("projected input has " + std::to_string(z.cols()) +
                    " columns, basis keeps " +
                    std::to_string(basis.components.rows()));
  }
  return (z * basis.components).rowwise() + basis.mean.transpose();
}

}  // namespace lfs
