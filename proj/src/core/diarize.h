// src/core/diarize.h

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

#ifndef LFSPEECH_CORE_DIARIZE_H_
#define LFSPEECH_CORE_DIARIZE_H_

#include <string>

#include "core/cluster-result.h"
#include "core/clustering.h"
#include "core/embedding-container.h"
#include "core/speaker-timeline.h"

namespace lfs {

struct DiarizeOptions {
  ClusterOptions clustering;
  double min_duration_off = 0.1;
  std::string label_prefix = "SPK_";
};

struct Diarization {
  SpeakerTimeline timeline;
  ClusterResult clusters;
};

// Clusters the window embeddings, merges equally labelled neighbouring
// windows into turns and absorbs short same-speaker gaps.
Diarization Diarize(const EmbeddingSet &embeddings,
                    const DiarizeOptions &options);

}  // namespace lfs

#endif  // LFSPEECH_CORE_DIARIZE_H_
