// src/core/gmm.cc

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

#include "core/gmm.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "core/error.h"
#include "core/kmeans.h"

namespace lfs {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log w_j + log N(x_i | mu_j, diag var_j) for every (i, j).
Eigen::MatrixXd JointLogDensity(const GmmModel &m, const Eigen::MatrixXd &x) {
  const Eigen::Index n = x.rows();
  const Eigen::Index d = x.cols();
  Eigen::MatrixXd out(n, m.k);
  const double log_two_pi = std::log(2.0 * std::numbers::pi);
  for (int32_t j = 0; j < m.k; ++j) {
    const Eigen::RowVectorXd inv_var = m.variances.row(j).cwiseInverse();
    const double log_norm =
        -0.5 * (d * log_two_pi + m.variances.row(j).array().log().sum());
    const double log_w = m.weights[j] > 0.0 ? std::log(m.weights[j]) : kNegInf;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double maha =
          ((x.row(i) - m.means.row(j)).array().square() * inv_var.array()).sum();
      out(i, j) = log_w + log_norm - 0.5 * maha;
    }
  }
  return out;
}

// Converts joint log densities into responsibilities in place and returns
// the total log-likelihood.
double Normalize(Eigen::MatrixXd *log_joint) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < log_joint->rows(); ++i) {
    auto row = log_joint->row(i);
    const double peak = row.maxCoeff();
    const double lse = peak + std::log((row.array() - peak).exp().sum());
    total += lse;
    row = (row.array() - lse).exp();
  }
  return total;
}

GmmModel InitFromKMeans(const Eigen::MatrixXd &x, int32_t k, uint64_t seed) {
  const ClusterResult init = KMeans(x, k, seed);
  GmmModel m;
  m.k = k;
  m.num_samples = x.rows();
  m.seed = seed;
  m.means = init.centroids;
  m.weights = Eigen::VectorXd::Zero(k);
  m.variances = Eigen::MatrixXd::Zero(k, x.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const int32_t c = init.labels[i];
    m.weights[c] += 1.0;
    m.variances.row(c) += (x.row(i) - m.means.row(c)).array().square().matrix();
  }
  for (int32_t c = 0; c < k; ++c) {
    m.variances.row(c) /= m.weights[c];
  }
  m.variances = m.variances.cwiseMax(kGmmVarianceFloor);
  m.weights /= static_cast<double>(x.rows());
  return m;
}

GmmModel RunEm(const Eigen::MatrixXd &x, int32_t k, uint64_t seed,
               const GmmOptions &options) {
  GmmModel m = InitFromKMeans(x, k, seed);
  GmmModel previous;
  const double n = static_cast<double>(x.rows());
  for (int32_t it = 0;; ++it) {
    Eigen::MatrixXd resp = JointLogDensity(m, x);
    const double ll = Normalize(&resp);
    // At a fixed point the M-step can lose a few ulps; keep the previous
    // parameters rather than record a step that went down.
    if (it > 0 && ll < m.log_likelihood) {
      m = std::move(previous);
      m.converged = true;
      break;
    }
    m.log_likelihood_history.push_back(ll);
    m.log_likelihood = ll;
    m.iterations = it;
    if (it > 0 && ll - m.log_likelihood_history[it - 1] < options.tolerance) {
      m.converged = true;
      break;
    }
    if (it == options.max_iterations) break;

    previous = m;
    const Eigen::VectorXd mass = resp.colwise().sum().transpose();
    for (int32_t j = 0; j < k; ++j) {
      m.weights[j] = mass[j] / n;
      if (mass[j] <= 0.0) continue;  // component starved; keep its shape
      const Eigen::RowVectorXd mean = (resp.col(j).transpose() * x) / mass[j];
      Eigen::RowVectorXd var = Eigen::RowVectorXd::Zero(x.cols());
      for (Eigen::Index i = 0; i < x.rows(); ++i) {
        var += resp(i, j) * (x.row(i) - mean).array().square().matrix();
      }
      m.means.row(j) = mean;
      m.variances.row(j) = (var / mass[j]).cwiseMax(kGmmVarianceFloor);
    }
    m.weights /= m.weights.sum();
  }
  m.param_count = static_cast<int64_t>(k) * 2 * x.cols() + (k - 1);
  return m;
}

}  // namespace

GmmModel GmmFit(const Eigen::MatrixXd &x, int32_t k, uint64_t seed,
                int32_t restarts, const GmmOptions &options) {
  if (k < 1 || k > x.rows()) {
    ThrowParameter("GMM needs 1 <= k <= N, got k=" + std::to_string(k) +
                   " with N=" + std::to_string(x.rows()));
  }
  if (restarts < 1) ThrowParameter("GMM restarts must be >= 1");
  GmmModel best;
  bool have = false;
  for (int32_t r = 0; r < restarts; ++r) {
    GmmModel m = RunEm(x, k, seed + static_cast<uint64_t>(r), options);
    // Restarts are visited in seed order, so a strict comparison keeps the
    // smaller seed on ties.
    if (!have || m.log_likelihood > best.log_likelihood) {
      best = std::move(m);
      have = true;
    }
  }
  return best;
}

double GmmLogLikelihood(const GmmModel &model, const Eigen::MatrixXd &x) {
  Eigen::MatrixXd joint = JointLogDensity(model, x);
  return Normalize(&joint);
}

std::vector<int32_t> GmmPredict(const GmmModel &model, const Eigen::MatrixXd &x) {
  const Eigen::MatrixXd joint = JointLogDensity(model, x);
  std::vector<int32_t> labels(x.rows());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    Eigen::Index best = 0;
    joint.row(i).maxCoeff(&best);
    labels[i] = static_cast<int32_t>(best);
  }
  return labels;
}

double Aic(const GmmModel &model) {
  return 2.0 * static_cast<double>(model.param_count) -
         2.0 * model.log_likelihood;
}

double Bic(const GmmModel &model) {
  return static_cast<double>(model.param_count) *
             std::log(static_cast<double>(model.num_samples)) -
         2.0 * model.log_likelihood;
}

GmmSelection SelectKGmm(const Eigen::MatrixXd &x, int32_t k_min, int32_t k_max,
                        InformationCriterion criterion, uint64_t seed,
                        int32_t restarts) {
  if (!(1 <= k_min && k_min <= k_max && k_max <= x.rows())) {
    ThrowParameter("GMM selection needs 1 <= k_min <= k_max <= N, got [" +
                   std::to_string(k_min) + ", " + std::to_string(k_max) + "]");
  }
  GmmSelection selection;
  double best = std::numeric_limits<double>::infinity();
  for (int32_t k = k_min; k <= k_max; ++k) {
    GmmModel m = GmmFit(x, k, seed, restarts);
    const double aic = Aic(m);
    const double bic = Bic(m);
    selection.sweep.push_back({k, m.log_likelihood, aic, bic});
    const double score = criterion == InformationCriterion::kAic ? aic : bic;
    if (score < best) {
      best = score;
      selection.k = k;
      selection.model = std::move(m);
    }
  }
  return selection;
}

nlohmann::ordered_json GmmModelToJson(const GmmModel &m) {
  auto rows = [](const Eigen::MatrixXd &mat) {
    auto out = nlohmann::ordered_json::array();
    for (Eigen::Index r = 0; r < mat.rows(); ++r) {
      std::vector<double> row(mat.cols());
      for (Eigen::Index c = 0; c < mat.cols(); ++c) row[c] = mat(r, c);
      out.push_back(row);
    }
    return out;
  };
  nlohmann::ordered_json doc;
  doc["k"] = m.k;
  doc["weights"] = std::vector<double>(m.weights.data(), m.weights.data() + m.weights.size());
  doc["means"] = rows(m.means);
  doc["variances"] = rows(m.variances);
  doc["log_likelihood"] = m.log_likelihood;
  doc["param_count"] = m.param_count;
  doc["num_samples"] = m.num_samples;
  doc["aic"] = Aic(m);
  doc["bic"] = Bic(m);
  doc["iterations"] = m.iterations;
  doc["converged"] = m.converged;
  doc["seed"] = m.seed;
  return doc;
}

}  // namespace lfs
