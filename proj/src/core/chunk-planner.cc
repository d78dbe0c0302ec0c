// src/core/chunk-planner.cc

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

#include "core/chunk-planner.h"

#include <algorithm>
#include <cmath>

#include "core/error.h"

namespace lfs {
namespace {

constexpr double kEps = 1e-9;

struct NaturalChunk {
  double start;
  double end;
};

}  // namespace

const char *BoundaryKindName(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::kSilence:
      return "silence";
    case BoundaryKind::kForced:
      return "forced";
    case BoundaryKind::kEndOfAudio:
      return "end-of-audio";
  }
  return "unknown";
}

BoundaryKind ParseBoundaryKind(const std::string &name) {
  if (name == "silence") return BoundaryKind::kSilence;
  if (name == "forced") return BoundaryKind::kForced;
  if (name == "end-of-audio") return BoundaryKind::kEndOfAudio;
  ThrowFormat("unknown chunk boundary kind '" + name + "'");
}

void Validate(const ChunkConfig &c) {
  if (!(c.min_dur > 0.0 && c.min_dur <= c.max_dur) || !std::isfinite(c.max_dur)) {
    ThrowParameter("chunk durations need 0 < min_dur <= max_dur, got " +
                   std::to_string(c.min_dur) + "/" + std::to_string(c.max_dur));
  }
}

ChunkPlan PlanChunks(const std::vector<TimeSpan> &nonsilent,
                     double total_duration, const ChunkConfig &config) {
  Validate(config);
  CheckSortedDisjoint(nonsilent, "non-silent spans");
  if (!nonsilent.empty() && nonsilent.back().end > total_duration + kEps) {
    ThrowStructural("non-silent spans extend past the source duration");
  }

  ChunkPlan plan;
  plan.source_duration = total_duration;
  if (nonsilent.empty()) return plan;

  std::vector<NaturalChunk> natural;
  for (std::size_t i = 0; i < nonsilent.size(); ++i) {
    double start = nonsilent[i].start;
    if (natural.empty() && config.include_leading_silence) start = 0.0;
    double end = nonsilent[i].end;
    while (end - start < config.min_dur && i + 1 < nonsilent.size()) {
      end = nonsilent[++i].end;
    }
    natural.push_back({start, end});
  }

  const double max_dur = config.max_dur;
  for (std::size_t c = 0; c < natural.size(); ++c) {
    const double start = natural[c].start;
    const double end = natural[c].end;
    const double length = end - start;
    const auto pieces = static_cast<int32_t>(
        length > max_dur + kEps ? std::ceil(length / max_dur - kEps) : 1);
    if (pieces == 1) {
      plan.chunks.push_back({start, end});
      plan.kinds.push_back(BoundaryKind::kSilence);
      continue;
    }
    const double remainder = length - (pieces - 1) * max_dur;
    const bool last = c + 1 == natural.size();
    double cursor = start;
    if (!last && remainder < config.min_dur) {
      plan.chunks.push_back({cursor, cursor + remainder});
      plan.kinds.push_back(BoundaryKind::kForced);
      cursor += remainder;
      for (int32_t k = 0; k + 1 < pieces; ++k) {
        const double next = k + 2 == pieces ? end : cursor + max_dur;
        plan.chunks.push_back({cursor, next});
        plan.kinds.push_back(k + 2 == pieces ? BoundaryKind::kSilence
                                             : BoundaryKind::kForced);
        cursor = next;
      }
    } else {
      for (int32_t k = 0; k < pieces; ++k) {
        const double next = k + 1 == pieces ? end : cursor + max_dur;
        plan.chunks.push_back({cursor, next});
        plan.kinds.push_back(k + 1 == pieces ? BoundaryKind::kSilence
                                             : BoundaryKind::kForced);
        cursor = next;
      }
    }
    plan.forced_split_count += pieces - 1;
  }
  if (plan.chunks.back().Duration() < config.min_dur) {
    plan.kinds.back() = BoundaryKind::kEndOfAudio;
  }
  return plan;
}

ChunkPlan PlanFixedChunks(double total_duration, double chunk_seconds) {
  if (!(chunk_seconds > 0.0)) {
    ThrowParameter("fixed chunk length must be positive");
  }
  ChunkPlan plan;
  plan.source_duration = total_duration;
  for (double t = 0.0; t < total_duration - kEps;) {
    const double next = std::min(total_duration, t + chunk_seconds);
    plan.chunks.push_back({t, next});
    plan.kinds.push_back(BoundaryKind::kForced);
    t = next;
  }
  if (!plan.chunks.empty()) {
    plan.kinds.back() = BoundaryKind::kEndOfAudio;
    plan.forced_split_count = static_cast<int32_t>(plan.chunks.size()) - 1;
  }
  return plan;
}

std::vector<Waveform> ChunkToSamples(const ChunkPlan &plan, const Waveform &w) {
  const double rate = w.sample_rate;
  if (std::fabs(plan.source_duration - w.Duration()) > 1.0 / rate + kEps) {
    ThrowStructural("plan covers " + std::to_string(plan.source_duration) +
                    " s but the waveform lasts " + std::to_string(w.Duration()) +
                    " s");
  }
  const auto n = static_cast<int64_t>(w.samples.size());
  std::vector<Waveform> out;
  out.reserve(plan.chunks.size());
  for (const TimeSpan &chunk : plan.chunks) {
    const int64_t begin =
        std::clamp<int64_t>(std::llround(chunk.start * rate), 0, n);
    const int64_t end = std::clamp<int64_t>(std::llround(chunk.end * rate), begin, n);
    Waveform piece;
    piece.sample_rate = w.sample_rate;
    piece.samples.assign(w.samples.begin() + begin, w.samples.begin() + end);
    out.push_back(std::move(piece));
  }
  return out;
}

BoundaryAudit AuditBoundaries(const std::vector<TimedWord> &words,
                              const ChunkPlan &plan) {
  BoundaryAudit audit;
  for (std::size_t i = 0; i < plan.chunks.size(); ++i) {
    if (i > 0) audit.boundaries.push_back(plan.chunks[i].start);
    if (i + 1 < plan.chunks.size()) audit.boundaries.push_back(plan.chunks[i].end);
  }
  std::sort(audit.boundaries.begin(), audit.boundaries.end());
  audit.boundaries.erase(
      std::unique(audit.boundaries.begin(), audit.boundaries.end()),
      audit.boundaries.end());
  for (double b : audit.boundaries) {
    int32_t count = 0;
    for (const TimedWord &w : words) {
      if (w.span.start < b && b < w.span.end) ++count;
    }
    audit.straddles.push_back(count);
    audit.total += count;
  }
  if (!audit.boundaries.empty()) {
    audit.mean_per_boundary =
        static_cast<double>(audit.total) / audit.boundaries.size();
  }
  return audit;
}

nlohmann::ordered_json ChunkPlanToJson(const ChunkPlan &plan,
                                       const std::string &recording_id,
                                       const ChunkConfig &config) {
  nlohmann::ordered_json doc;
  doc["recording_id"] = recording_id;
  doc["config"] = {{"min_dur", config.min_dur},
                   {"max_dur", config.max_dur},
                   {"include_leading_silence", config.include_leading_silence}};
  doc["source_duration"] = plan.source_duration;
  doc["forced_split_count"] = plan.forced_split_count;
  auto chunks = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < plan.chunks.size(); ++i) {
    chunks.push_back({{"start", plan.chunks[i].start},
                      {"end", plan.chunks[i].end},
                      {"kind", BoundaryKindName(plan.kinds[i])}});
  }
  doc["chunks"] = std::move(chunks);
  return doc;
}

nlohmann::ordered_json BoundaryAuditToJson(const BoundaryAudit &audit) {
  return {{"boundaries", audit.boundaries.size()},
          {"total_straddles", audit.total},
          {"mean_per_boundary", audit.mean_per_boundary},
          {"per_boundary", audit.straddles}};
}

}  // namespace lfs
