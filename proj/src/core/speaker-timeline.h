// src/core/speaker-timeline.h

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

#ifndef LFSPEECH_CORE_SPEAKER_TIMELINE_H_
#define LFSPEECH_CORE_SPEAKER_TIMELINE_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "core/time-span.h"

namespace lfs {

struct SpeakerSegment {
  TimeSpan span;
  std::string speaker;

  friend bool operator==(const SpeakerSegment &, const SpeakerSegment &) =
      default;
};

// Segments of one recording. Normalized form: sorted by (start, end,
// speaker); segments of the same speaker neither overlap nor touch.
// Different speakers may overlap.
struct SpeakerTimeline {
  std::string recording_id;
  std::vector<SpeakerSegment> segments;

  friend bool operator==(const SpeakerTimeline &, const SpeakerTimeline &) =
      default;
};

// Non-empty and free of whitespace, quotes and commas.
bool IsValidLabel(const std::string &label);

struct NormalizeStats {
  int32_t dropped_zero_duration = 0;
  int32_t merged = 0;
};

// Drops zero-length segments, fuses overlapping or touching segments of the
// same speaker and sorts. Throws a structural error for negative, reversed or
// non-finite spans and invalid labels.
SpeakerTimeline Normalize(SpeakerTimeline timeline,
                          NormalizeStats *stats = nullptr);

bool IsNormalized(const SpeakerTimeline &timeline);

// Per speaker, fuses consecutive segments separated by less than
// min_duration_off seconds. Speakers are never merged with each other.
SpeakerTimeline SuppressGaps(const SpeakerTimeline &timeline,
                             double min_duration_off);

// Turns labelled sliding windows into speaker turns. Consecutive windows
// with the same label form one turn; at a label change between overlapping
// windows the boundary is the midpoint of their overlap, between disjoint
// windows each turn keeps its own edge. A run is also broken where
// consecutive windows leave a gap.
SpeakerTimeline MergeAdjacentWindows(std::span<const TimeSpan> windows,
                                     std::span<const std::string> labels,
                                     const std::string &recording_id = {});

std::map<std::string, double> SpeechTimePerSpeaker(
    const SpeakerTimeline &timeline);

}  // namespace lfs

#endif  // LFSPEECH_CORE_SPEAKER_TIMELINE_H_
