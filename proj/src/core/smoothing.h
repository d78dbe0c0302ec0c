// src/core/smoothing.h

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

#ifndef LFSPEECH_CORE_SMOOTHING_H_
#define LFSPEECH_CORE_SMOOTHING_H_

#include <cstdint>
#include <span>
#include <vector>

namespace lfs {

// Sliding majority vote over a time-ordered label sequence, evaluated left
// to right in place: the left half of each window already holds smoothed
// labels. Windows are truncated at the edges. The centre keeps its label
// whenever it is among the most frequent; otherwise the smallest of the
// most frequent labels wins. window must be odd and >= 1.
std::vector<int32_t> SmoothLabelsTemporal(std::span<const int32_t> labels,
                                          int32_t window);

}  // namespace lfs

#endif  // LFSPEECH_CORE_SMOOTHING_H_
