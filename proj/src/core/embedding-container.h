// src/core/embedding-container.h

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

#ifndef LFSPEECH_CORE_EMBEDDING_CONTAINER_H_
#define LFSPEECH_CORE_EMBEDDING_CONTAINER_H_

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "core/time-span.h"

namespace lfs {

// N window embeddings of dimension D, row-major, with one span per window.
struct EmbeddingSet {
  std::string recording_id;
  uint32_t dim = 0;
  std::vector<float> data;  // N * dim
  std::vector<TimeSpan> spans;

  size_t size() const { return spans.size(); }
  Eigen::MatrixXd ToMatrix() const;
  friend bool operator==(const EmbeddingSet &, const EmbeddingSet &) = default;
};

inline constexpr uint16_t kEmbeddingContainerVersion = 1;

// Layout, all little-endian:
//   "EMB1" | u16 version | u32 N | u32 D | N*D f32 | N x (f64 start, f64 end)
//   | u32 byte length | recording id (UTF-8)
// The payload must match N and D exactly. Spans must be valid and sorted by
// start; vectors must be finite. Violations are format errors naming the
// byte offset.
EmbeddingSet ReadEmbeddings(const std::vector<uint8_t> &bytes);
std::vector<uint8_t> WriteEmbeddings(const EmbeddingSet &set);

// Structural checks shared by the reader and writer.
void Validate(const EmbeddingSet &set);

EmbeddingSet ReadEmbeddingsFile(const std::string &path);
// Temp file plus rename.
void WriteEmbeddingsFile(const std::string &path, const EmbeddingSet &set);

}  // namespace lfs

#endif  // LFSPEECH_CORE_EMBEDDING_CONTAINER_H_
