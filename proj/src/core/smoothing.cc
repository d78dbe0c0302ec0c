// src/core/smoothing.cc

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

#include "core/smoothing.h"

#include <algorithm>
#include <map>
#include <string>

#include "core/error.h"

namespace lfs {

std::vector<int32_t> SmoothLabelsTemporal(std::span<const int32_t> labels,
                                          int32_t window) {
  if (window < 1 || window % 2 == 0) {
    ThrowParameter("smoothing window must be odd and >= 1, got " +
                   std::to_string(window));
  }
  std::vector<int32_t> out(labels.begin(), labels.end());
  const int64_t n = static_cast<int64_t>(out.size());
  const int64_t half = window / 2;
  if (half == 0) return out;
  std::map<int32_t, int32_t> counts;
  for (int64_t i = 0; i < n; ++i) {
    counts.clear();
    const int64_t lo = std::max<int64_t>(0, i - half);
    const int64_t hi = std::min<int64_t>(n - 1, i + half);
    for (int64_t j = lo; j <= hi; ++j) ++counts[out[j]];
    const int32_t centre = labels[i];
    int32_t best = centre;
    int32_t best_count = counts[centre];
    for (const auto &[label, count] : counts) {
      if (count > best_count) {
        best = label;
        best_count = count;
      }
    }
    out[i] = best;
  }
  return out;
}

}  // namespace lfs
