// src/core/gmm.h

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

#ifndef LFSPEECH_CORE_GMM_H_
#define LFSPEECH_CORE_GMM_H_

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

namespace lfs {

inline constexpr double kGmmVarianceFloor = 1e-6;

// Diagonal-covariance Gaussian mixture.
struct GmmModel {
  int32_t k = 0;
  Eigen::VectorXd weights;    // sums to 1
  Eigen::MatrixXd means;      // k x D
  Eigen::MatrixXd variances;  // k x D, each >= kGmmVarianceFloor
  double log_likelihood = 0.0;
  int64_t param_count = 0;  // k*2D + (k-1)
  int64_t num_samples = 0;
  int32_t iterations = 0;
  bool converged = false;
  uint64_t seed = 0;  // seed of the winning restart
  std::vector<double> log_likelihood_history;  // one entry per E-step
};

struct GmmOptions {
  int32_t max_iterations = 200;
  double tolerance = 1e-6;  // absolute log-likelihood gain
};

// EM from a k-means initialization. Restart r uses seed + r; the restart
// with the highest log-likelihood wins, ties going to the smaller seed.
GmmModel GmmFit(const Eigen::MatrixXd &x, int32_t k, uint64_t seed,
                int32_t restarts = 1, const GmmOptions &options = {});

// Total log-likelihood of x under the model.
double GmmLogLikelihood(const GmmModel &model, const Eigen::MatrixXd &x);

// Most responsible component per row.
std::vector<int32_t> GmmPredict(const GmmModel &model, const Eigen::MatrixXd &x);

// 2p - 2 logL
double Aic(const GmmModel &model);
// p ln N - 2 logL
double Bic(const GmmModel &model);

enum class InformationCriterion { kAic, kBic };

struct GmmSelection {
  int32_t k = 0;
  GmmModel model;
  struct Entry {
    int32_t k;
    double log_likelihood;
    double aic;
    double bic;
  };
  std::vector<Entry> sweep;
};

// Fits every k in [k_min, k_max] and keeps the minimum criterion, ties going
// to the smaller k.
GmmSelection SelectKGmm(const Eigen::MatrixXd &x, int32_t k_min, int32_t k_max,
                        InformationCriterion criterion, uint64_t seed,
                        int32_t restarts = 1);

nlohmann::ordered_json GmmModelToJson(const GmmModel &model);

}  // namespace lfs

#endif  // LFSPEECH_CORE_GMM_H_
