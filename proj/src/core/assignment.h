// src/core/assignment.h

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

#ifndef LFSPEECH_CORE_ASSIGNMENT_H_
#define LFSPEECH_CORE_ASSIGNMENT_H_

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace lfs {

// Minimum-cost one-to-one assignment on a rectangular R x H matrix, padded
// to a square with zeros. Returns, per row, the assigned column or -1 when
// the row went to a padding column. Exact (Hungarian method with
// potentials, O(n^3)).
std::vector<int32_t> OptimalAssignment(const Eigen::MatrixXd &cost);

// Sum of cost over the assigned (row, column) pairs.
double AssignmentCost(const Eigen::MatrixXd &cost,
                      const std::vector<int32_t> &assignment);

}  // namespace lfs

#endif  // LFSPEECH_CORE_ASSIGNMENT_H_
