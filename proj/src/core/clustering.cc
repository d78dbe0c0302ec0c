// src/core/clustering.cc

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

#include "core/clustering.h"

#include <algorithm>
#include <string>
#include <vector>

#include "core/ahc.h"
#include "core/error.h"
#include "core/kmeans.h"
#include "core/pca.h"
#include "core/smoothing.h"

namespace lfs {
namespace {

// Optional PCA reduction for the Euclidean methods.
Eigen::MatrixXd Reduce(const Eigen::MatrixXd &x, int32_t components,
                       nlohmann::ordered_json *diag) {
  const Eigen::Index cap = std::min(x.rows(), x.cols());
  if (components <= 0 || x.rows() < 2) {
    (*diag)["pca_components"] = 0;
    return x;
  }
  const int c = static_cast<int>(std::min<Eigen::Index>(components, cap));
  const PcaBasis basis = PcaFit(x, c);
  (*diag)["pca_components"] = c;
  (*diag)["pca_explained_variance"] = basis.explained_variance_ratio.sum();
  return PcaTransform(basis, x);
}

void Finish(const Eigen::MatrixXd &x, std::vector<int32_t> labels,
            int32_t window, ClusterResult *result) {
  if (window > 1) {
    labels = SmoothLabelsTemporal(labels, window);
    result->diagnostics["smoothing_window"] = window;
  }
  int32_t k = 0;
  result->labels = RelabelByFirstAppearance(labels, &k);
  result->k = k;
  result->centroids = ClusterMeans(x, result->labels, k);
}

}  // namespace

const char *ClusterMethodName(ClusterMethod method) {
  switch (method) {
    case ClusterMethod::kAhc:
      return "ahc";
    case ClusterMethod::kKMeans:
      return "kmeans";
    case ClusterMethod::kGmm:
      return "gmm";
    case ClusterMethod::kOvercluster:
      return "overcluster";
  }
  return "?";
}

ClusterMethod ParseClusterMethod(std::string_view name) {
  for (ClusterMethod m : {ClusterMethod::kAhc, ClusterMethod::kKMeans,
                          ClusterMethod::kGmm, ClusterMethod::kOvercluster}) {
    if (name == ClusterMethodName(m)) return m;
  }
  ThrowParameter("unknown clustering method '" + std::string(name) +
                 "' (expected ahc, kmeans, gmm or overcluster)");
}

void Validate(const ClusterOptions &o) {
  if (!(o.tau > 0.0)) ThrowParameter("tau must be > 0");
  if (o.min_cluster_size < 1) ThrowParameter("min_cluster_size must be >= 1");
  if (o.pca_components < 0) ThrowParameter("pca_components must be >= 0");
  if (o.num_clusters < 0) ThrowParameter("num_clusters must be >= 0");
  if (o.k_min < 1 || o.k_max < o.k_min) {
    ThrowParameter("k range must satisfy 1 <= k_min <= k_max");
  }
  if (o.restarts < 1) ThrowParameter("restarts must be >= 1");
  if (o.overcluster_k < 1) ThrowParameter("overcluster_k must be >= 1");
  if (o.smoothing_window < 0 ||
      (o.smoothing_window > 0 && o.smoothing_window % 2 == 0)) {
    ThrowParameter("smoothing window must be odd (or 0 for the default)");
  }
}

ClusterResult ClusterEmbeddings(const Eigen::MatrixXd &x,
                                const ClusterOptions &o) {
  Validate(o);
  ClusterResult result;
  result.method = ClusterMethodName(o.method);
  result.centroids = Eigen::MatrixXd(0, x.cols());
  const int32_t n = static_cast<int32_t>(x.rows());
  if (n == 0) return result;
  if (!x.allFinite()) ThrowFormat("embeddings contain non-finite values");

  int32_t window = o.smoothing_window;
  if (window == 0) window = o.method == ClusterMethod::kOvercluster ? 5 : 1;
  auto &diag = result.diagnostics;
  diag["seed"] = o.seed;

  switch (o.method) {
    case ClusterMethod::kAhc: {
      ClusterResult ahc = AhcCentroid(x, o.tau, o.min_cluster_size);
      diag.update(ahc.diagnostics);
      Finish(x, std::move(ahc.labels), window, &result);
      break;
    }
    case ClusterMethod::kKMeans: {
      const Eigen::MatrixXd z = Reduce(x, o.pca_components, &diag);
      int32_t k = std::min(o.num_clusters, n);
      if (k == 0) {
        const int32_t lo = std::max(2, o.k_min);
        const int32_t hi = std::min(o.k_max, n - 1);
        if (lo > hi) {
          k = 1;
        } else {
          const SilhouetteSweep sweep = EstimateKSilhouette(z, lo, hi, o.seed);
          k = sweep.best_k;
          auto scores = nlohmann::ordered_json::array();
          for (const auto &[kk, s] : sweep.scores) {
            scores.push_back({{"k", kk}, {"silhouette", s}});
          }
          diag["silhouette_sweep"] = scores;
        }
      }
      ClusterResult km = KMeans(z, k, o.seed);
      diag["iterations"] = km.diagnostics["iterations"];
      diag["inertia"] = km.diagnostics["inertia"];
      Finish(x, std::move(km.labels), window, &result);
      break;
    }
    case ClusterMethod::kGmm:
    case ClusterMethod::kOvercluster: {
      const Eigen::MatrixXd z = Reduce(x, o.pca_components, &diag);
      GmmModel model;
      if (o.method == ClusterMethod::kOvercluster) {
        model = GmmFit(z, std::min(o.overcluster_k, n), o.seed, o.restarts);
      } else if (o.num_clusters > 0) {
        model = GmmFit(z, std::min(o.num_clusters, n), o.seed, o.restarts);
      } else {
        const int32_t hi = std::min(o.k_max, n);
        const int32_t lo = std::min(o.k_min, hi);
        GmmSelection sel = SelectKGmm(z, lo, hi, o.criterion, o.seed, o.restarts);
        auto sweep = nlohmann::ordered_json::array();
        for (const auto &e : sel.sweep) {
          sweep.push_back({{"k", e.k},
                           {"log_likelihood", e.log_likelihood},
                           {"aic", e.aic},
                           {"bic", e.bic}});
        }
        diag["criterion"] =
            o.criterion == InformationCriterion::kAic ? "aic" : "bic";
        diag["gmm_sweep"] = sweep;
        model = std::move(sel.model);
      }
      diag["gmm_components"] = model.k;
      diag["log_likelihood"] = model.log_likelihood;
      diag["aic"] = Aic(model);
      diag["bic"] = Bic(model);
      diag["iterations"] = model.iterations;
      diag["converged"] = model.converged;
      Finish(x, GmmPredict(model, z), window, &result);
      break;
    }
  }
  return result;
}

nlohmann::ordered_json ClusterOptionsToJson(const ClusterOptions &o) {
  nlohmann::ordered_json j;
  j["method"] = ClusterMethodName(o.method);
  j["tau"] = o.tau;
  j["min_cluster_size"] = o.min_cluster_size;
  j["pca_components"] = o.pca_components;
  j["num_clusters"] = o.num_clusters;
  j["k_min"] = o.k_min;
  j["k_max"] = o.k_max;
  j["criterion"] = o.criterion == InformationCriterion::kAic ? "aic" : "bic";
  j["restarts"] = o.restarts;
  j["overcluster_k"] = o.overcluster_k;
  j["smoothing_window"] = o.smoothing_window;
  j["seed"] = o.seed;
  return j;
}

nlohmann::ordered_json ClusterResultToJson(const ClusterResult &r) {
  nlohmann::ordered_json j;
  j["method"] = r.method;
  j["k"] = r.k;
  j["labels"] = r.labels;
  auto centroids = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < r.centroids.rows(); ++i) {
    std::vector<double> row(r.centroids.cols());
    for (Eigen::Index c = 0; c < r.centroids.cols(); ++c) row[c] = r.centroids(i, c);
    centroids.push_back(row);
  }
  j["centroids"] = centroids;
  j["diagnostics"] = r.diagnostics;
  return j;
}

}  // namespace lfs
