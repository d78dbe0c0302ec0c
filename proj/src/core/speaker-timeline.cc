// src/core/speaker-timeline.cc

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

#include "core/speaker-timeline.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <tuple>

#include "core/error.h"

namespace lfs {
namespace {

bool SegmentLess(const SpeakerSegment &a, const SpeakerSegment &b) {
  return std::tie(a.span.start, a.span.end, a.speaker) <
         std::tie(b.span.start, b.span.end, b.speaker);
}

// Fuses same-speaker segments whose gap is below max_gap (or touching when
// inclusive). Input must already be free of invalid spans.
std::vector<SpeakerSegment> FuseBySpeaker(std::vector<SpeakerSegment> segs,
                                          double max_gap, bool inclusive,
                                          int32_t *merged) {
  std::stable_sort(segs.begin(), segs.end(),
                   [](const SpeakerSegment &a, const SpeakerSegment &b) {
                     return std::tie(a.speaker, a.span.start, a.span.end) <
                            std::tie(b.speaker, b.span.start, b.span.end);
                   });
  std::vector<SpeakerSegment> out;
  for (auto &seg : segs) {
    if (!out.empty() && out.back().speaker == seg.speaker) {
      const double gap = seg.span.start - out.back().span.end;
      if (gap < max_gap || (inclusive && gap <= max_gap)) {
        out.back().span.end = std::max(out.back().span.end, seg.span.end);
        if (merged != nullptr) ++*merged;
        continue;
      }
    }
    out.push_back(std::move(seg));
  }
  std::sort(out.begin(), out.end(), SegmentLess);
  return out;
}

}  // namespace

bool IsValidLabel(const std::string &label) {
  if (label.empty()) return false;
  for (unsigned char c : label) {
    if (std::isspace(c) || c == '"' || c == '\'' || c == ',') return false;
  }
  return true;
}

SpeakerTimeline Normalize(SpeakerTimeline timeline, NormalizeStats *stats) {
  NormalizeStats local;
  std::vector<SpeakerSegment> kept;
  kept.reserve(timeline.segments.size());
  for (auto &seg : timeline.segments) {
    const TimeSpan &s = seg.span;
    if (!std::isfinite(s.start) || !std::isfinite(s.end) || s.start < 0.0 ||
        s.end < s.start) {
      ThrowStructural("invalid segment [" + std::to_string(s.start) + ", " +
                      std::to_string(s.end) + "] in " + timeline.recording_id);
    }
    if (!IsValidLabel(seg.speaker)) {
      ThrowStructural("invalid speaker label '" + seg.speaker + "' in " +
                      timeline.recording_id);
    }
    if (s.start == s.end) {
      ++local.dropped_zero_duration;
      continue;
    }
    kept.push_back(std::move(seg));
  }
  timeline.segments = FuseBySpeaker(std::move(kept), 0.0, true, &local.merged);
  if (stats != nullptr) *stats = local;
  return timeline;
}

bool IsNormalized(const SpeakerTimeline &timeline) {
  const auto &segs = timeline.segments;
  if (!std::is_sorted(segs.begin(), segs.end(), SegmentLess)) return false;
  std::map<std::string, double> last_end;
  for (const auto &seg : segs) {
    if (!IsValid(seg.span) || !IsValidLabel(seg.speaker)) return false;
    auto it = last_end.find(seg.speaker);
    if (it != last_end.end() && seg.span.start <= it->second) return false;
    last_end[seg.speaker] = seg.span.end;
  }
  return true;
}

SpeakerTimeline SuppressGaps(const SpeakerTimeline &timeline,
                             double min_duration_off) {
  if (!(min_duration_off >= 0.0)) {
    ThrowParameter("min_duration_off must be >= 0, got " +
                   std::to_string(min_duration_off));
  }
  SpeakerTimeline out = Normalize(timeline);
  out.segments =
      FuseBySpeaker(std::move(out.segments), min_duration_off, false, nullptr);
  return out;
}

SpeakerTimeline MergeAdjacentWindows(std::span<const TimeSpan> windows,
                                     std::span<const std::string> labels,
                                     const std::string &recording_id) {
  if (windows.size() != labels.size()) {
    ThrowStructural("got " + std::to_string(windows.size()) + " windows but " +
                    std::to_string(labels.size()) + " labels");
  }
  SpeakerTimeline out;
  out.recording_id = recording_id;
  if (windows.empty()) return out;
  for (std::size_t i = 0; i < windows.size(); ++i) {
    if (!IsValid(windows[i])) {
      ThrowStructural("invalid window at index " + std::to_string(i));
    }
    if (i > 0 && windows[i].start < windows[i - 1].start) {
      ThrowStructural("windows are not sorted by start at index " +
                      std::to_string(i));
    }
  }

  double run_start = windows[0].start;
  double run_end = windows[0].end;
  const std::string *run_label = &labels[0];
  auto emit = [&](double end) {
    if (end > run_start) {
      out.segments.push_back({{run_start, end}, *run_label});
    }
  };
  for (std::size_t i = 1; i < windows.size(); ++i) {
    const TimeSpan &w = windows[i];
    if (labels[i] == *run_label && w.start <= run_end) {
      run_end = std::max(run_end, w.end);
      continue;
    }
    const double prev_end = windows[i - 1].end;
    if (labels[i] != *run_label && w.start < prev_end) {
      const double boundary = 0.5 * (w.start + prev_end);
      emit(boundary);
      run_start = std::max(boundary, run_start);
    } else {
      emit(run_end);
      run_start = w.start;
    }
    run_end = w.end;
    run_label = &labels[i];
  }
  emit(run_end);
  return Normalize(std::move(out));
}

std::map<std::string, double> SpeechTimePerSpeaker(
    const SpeakerTimeline &timeline) {
  std::map<std::string, double> totals;
  for (const auto &seg : Normalize(timeline).segments) {
    totals[seg.speaker] += seg.span.Duration();
  }
  return totals;
}

}  // namespace lfs
