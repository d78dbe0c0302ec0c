// src/core/chunk-planner.h

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

#ifndef LFSPEECH_CORE_CHUNK_PLANNER_H_
#define LFSPEECH_CORE_CHUNK_PLANNER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "core/time-span.h"
#include "json.hpp"
#include "core/waveform.h"

namespace lfs {

enum class BoundaryKind { kSilence, kForced, kEndOfAudio };

const char *BoundaryKindName(BoundaryKind kind);
BoundaryKind ParseBoundaryKind(const std::string &name);

struct ChunkConfig {
  double min_dur = 20.0;
  double max_dur = 30.0;
  bool include_leading_silence = false;
};

void Validate(const ChunkConfig &config);

struct ChunkPlan {
  std::vector<TimeSpan> chunks;
  std::vector<BoundaryKind> kinds;  // how each chunk ends
  double source_duration = 0.0;
  int32_t forced_split_count = 0;
};

// Silence-aware chunking of non-silent spans.
//
// A chunk opens at the first uncovered non-silent instant and absorbs whole
// spans until it lasts at least min_dur, then closes at the end of the
// current span, which is a silence boundary. Silence between spans inside
// one chunk is kept. A chunk that would exceed max_dur is cut into pieces of
// exactly max_dur ("forced" boundaries); when the leftover piece would be
// shorter than min_dur and more audio follows, the short piece goes first so
// that the chunk still closes on silence. The last chunk is tagged
// end-of-audio when it is shorter than min_dur.
ChunkPlan PlanChunks(const std::vector<TimeSpan> &nonsilent,
                     double total_duration, const ChunkConfig &config);

// Back-to-back fixed windows over [0, total_duration) for baseline audits.
ChunkPlan PlanFixedChunks(double total_duration, double chunk_seconds);

// Sample slices for each chunk, boundaries rounded to the nearest sample.
std::vector<Waveform> ChunkToSamples(const ChunkPlan &plan, const Waveform &w);

struct TimedWord {
  std::string word;
  TimeSpan span;
};

struct BoundaryAudit {
  std::vector<double> boundaries;
  std::vector<int32_t> straddles;  // per boundary
  int32_t total = 0;
  double mean_per_boundary = 0.0;
};

// Counts reference words whose span strictly contains a chunk boundary
// (start < b < end). Boundaries are every chunk start and end other than
// the plan's outermost two.
BoundaryAudit AuditBoundaries(const std::vector<TimedWord> &words,
                              const ChunkPlan &plan);

// {"recording_id", "config", "source_duration", "forced_split_count",
//  "chunks": [{"start", "end", "kind"}]}
nlohmann::ordered_json ChunkPlanToJson(const ChunkPlan &plan,
                                       const std::string &recording_id,
                                       const ChunkConfig &config);

nlohmann::ordered_json BoundaryAuditToJson(const BoundaryAudit &audit);

}  // namespace lfs

#endif  // LFSPEECH_CORE_CHUNK_PLANNER_H_
