// src/core/diarize.cc

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

#include "core/diarize.h"

#include <vector>

#include "core/error.h"

namespace lfs {

Diarization Diarize(const EmbeddingSet &embeddings,
                    const DiarizeOptions &options) {
  if (!(options.min_duration_off >= 0.0)) {
    ThrowParameter("min_duration_off must be >= 0");
  }
  Validate(embeddings);
  Diarization out;
  out.clusters = ClusterEmbeddings(embeddings.ToMatrix(), options.clustering);
  std::vector<std::string> names;
  names.reserve(out.clusters.labels.size());
  for (int32_t label : out.clusters.labels) {
    names.push_back(options.label_prefix + std::to_string(label));
  }
  const SpeakerTimeline merged = MergeAdjacentWindows(
      embeddings.spans, names, embeddings.recording_id);
  out.timeline = SuppressGaps(merged, options.min_duration_off);
  return out;
}

}  // namespace lfs
