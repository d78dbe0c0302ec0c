// tests/unit/chunk-planner-test.cc

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
#include "core/error.h"
#include "doctest.h"
#include "test-util.h"

using namespace lfs;
using namespace lfs::testing;

namespace {

void CheckMatchesHand(const std::vector<TimeSpan> &spans, double total,
                      double min_dur, double max_dur) {
  const ChunkPlan plan = PlanChunks(spans, total, {min_dur, max_dur, false});
  const std::vector<HandChunk> hand = HandChunks(spans, min_dur, max_dur);
  REQUIRE(plan.chunks.size() == hand.size());
  for (std::size_t i = 0; i < hand.size(); ++i) {
    CHECK(plan.chunks[i] == hand[i].span);
    CHECK(BoundaryKindName(plan.kinds[i]) == hand[i].kind);
  }
}

}  // namespace

TEST_SUITE("chunk-planner") {

TEST_CASE("silence-boundary hand case") {
  const std::vector<TimeSpan> spans = {{0, 12}, {13, 26}, {27, 40}};
  CheckMatchesHand(spans, 40, 20, 30);
  const ChunkPlan plan = PlanChunks(spans, 40, {});
  REQUIRE(plan.chunks.size() == 2);
  CHECK(plan.chunks[0] == TimeSpan{0, 26});
  CHECK(plan.kinds[0] == BoundaryKind::kSilence);
  CHECK(plan.chunks[1] == TimeSpan{27, 40});
  CHECK(plan.kinds[1] == BoundaryKind::kEndOfAudio);
  CHECK(plan.forced_split_count == 0);
}

TEST_CASE("forced-split hand case") {
  CheckMatchesHand({{0, 70}}, 70, 20, 30);
  const ChunkPlan plan = PlanChunks({{0, 70}}, 70, {});
  REQUIRE(plan.chunks.size() == 3);
  CHECK(plan.chunks[0] == TimeSpan{0, 30});
  CHECK(plan.chunks[1] == TimeSpan{30, 60});
  CHECK(plan.chunks[2] == TimeSpan{60, 70});
  CHECK(plan.kinds[0] == BoundaryKind::kForced);
  CHECK(plan.kinds[1] == BoundaryKind::kForced);
  CHECK(plan.forced_split_count == 2);
}

TEST_CASE("simple greedy cases agree with the hand simulation") {
  CheckMatchesHand({{0, 5}, {6, 22}, {23, 30}, {31, 55}}, 60, 20, 30);
  CheckMatchesHand({{1, 25}, {26, 27}}, 27, 20, 30);
  CheckMatchesHand({{0, 10}}, 10, 20, 30);
}

TEST_CASE("empty input and leading silence") {
  const ChunkPlan empty = PlanChunks({}, 12.0, {});
  CHECK(empty.chunks.empty());
  CHECK(empty.forced_split_count == 0);
  const ChunkPlan lead = PlanChunks({{3, 25}}, 25, {20, 30, true});
  REQUIRE(lead.chunks.size() == 1);
  CHECK(lead.chunks[0] == TimeSpan{0, 25});
  CHECK(PlanChunks({{3, 25}}, 25, {}).chunks[0] == TimeSpan{3, 25});
}

TEST_CASE("invalid input") {
  auto kind = [](auto fn) {
    try {
      fn();
    } catch (const Error &e) {
      return e.kind();
    }
    return ErrorKind::kIo;
  };
  CHECK(kind([] { PlanChunks({{0, 5}, {4, 8}}, 8, {}); }) == ErrorKind::kStructural);
  CHECK(kind([] { PlanChunks({{5, 8}, {0, 2}}, 8, {}); }) == ErrorKind::kStructural);
  CHECK(kind([] { PlanChunks({{0, 5}}, 8, {40, 30, false}); }) == ErrorKind::kParameter);
  CHECK(kind([] { PlanChunks({{0, 5}}, 8, {0, 30, false}); }) == ErrorKind::kParameter);
}

TEST_CASE("plan invariants on random span sets") {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    double total = 0;
    const std::vector<TimeSpan> spans = RandomSpans(rng, &total);
    const double min_dur = rng.Uniform(1, 25);
    const double max_dur = min_dur + rng.Uniform(0, 20);
    const ChunkConfig cfg{min_dur, max_dur, rng.Coin(0.2)};
    const ChunkPlan plan = PlanChunks(spans, total, cfg);
    CHECK_MESSAGE(PlanViolation(spans, total, cfg, plan).empty(),
                  "trial ", trial, ": ", PlanViolation(spans, total, cfg, plan));
    const ChunkPlan again = PlanChunks(spans, total, cfg);
    CHECK(again.chunks == plan.chunks);
    CHECK(again.kinds == plan.kinds);
    ChunkConfig wider = cfg;
    wider.max_dur += rng.Uniform(0.01, 30);
    CHECK(PlanChunks(spans, total, wider).forced_split_count <= plan.forced_split_count);
  }
}

TEST_CASE("chunk extraction") {
  Waveform w;
  w.sample_rate = 16000;
  w.samples.resize(48000);
  for (std::size_t i = 0; i < w.samples.size(); ++i) w.samples[i] = float(i % 1000) / 1000;

  ChunkPlan whole;
  whole.source_duration = 3.0;
  whole.chunks = {{0, 3}};
  whole.kinds = {BoundaryKind::kEndOfAudio};
  CHECK(ChunkToSamples(whole, w)[0].samples == w.samples);

  ChunkPlan one = whole;
  one.chunks = {{1.0, 2.0}};
  CHECK(ChunkToSamples(one, w)[0].samples.size() == 16000);

  ChunkPlan two = whole;
  two.chunks = {{0.5, 1.23456}, {1.23456, 2.9}};
  two.kinds = {BoundaryKind::kSilence, BoundaryKind::kEndOfAudio};
  const auto pieces = ChunkToSamples(two, w);
  std::vector<float> joined = pieces[0].samples;
  joined.insert(joined.end(), pieces[1].samples.begin(), pieces[1].samples.end());
  CHECK(joined == std::vector<float>(w.samples.begin() + 8000, w.samples.begin() + 46400));

  ChunkPlan wrong = whole;
  wrong.source_duration = 2.5;
  CHECK_THROWS_AS(ChunkToSamples(wrong, w), Error);
}

TEST_CASE("boundary audit") {
  ChunkPlan plan;
  plan.source_duration = 20;
  plan.chunks = {{0, 10}, {10, 20}};
  plan.kinds = {BoundaryKind::kSilence, BoundaryKind::kEndOfAudio};
  CHECK(AuditBoundaries({{"a", {2, 3}}, {"b", {11, 12}}}, plan).total == 0);
  const BoundaryAudit one = AuditBoundaries({{"w", {9.8, 10.2}}}, plan);
  CHECK(one.total == 1);
  CHECK(one.mean_per_boundary == 1.0);
  CHECK(AuditBoundaries({{"w", {9.5, 10.0}}}, plan).total == 0);
}

TEST_CASE("fixed chunks straddle at least as many words as silence-aware chunks") {
  Rng rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    double total = 0;
    const std::vector<TimeSpan> spans = RandomSpans(rng, &total);
    std::vector<TimedWord> words;
    for (const TimeSpan &s : spans) {
      for (double t = s.start; t < s.end;) {
        const double len = std::min(s.end - t, rng.Uniform(0.1, 0.6));
        words.push_back({"w", {t, t + len}});
        t += len;
      }
    }
    const ChunkPlan aware = PlanChunks(spans, total, {});
    const ChunkPlan fixed = PlanFixedChunks(total, 30.0);
    // Oracle: direct count of words strictly containing a boundary.
    auto count = [&](const ChunkPlan &plan) {
      std::set<double> bounds;
      for (std::size_t i = 0; i + 1 < plan.chunks.size(); ++i) {
        bounds.insert(plan.chunks[i].end);
        bounds.insert(plan.chunks[i + 1].start);
      }
      int n = 0;
      for (double b : bounds) {
        for (const auto &w : words) n += w.span.start < b && b < w.span.end;
      }
      return n;
    };
    CHECK(AuditBoundaries(words, aware).total == count(aware));
    CHECK(AuditBoundaries(words, fixed).total == count(fixed));
    // Only forced cuts can land inside a word.
    if (aware.forced_split_count == 0) {
      CHECK(AuditBoundaries(words, fixed).total >= AuditBoundaries(words, aware).total);
    }
  }
}

TEST_CASE("plan JSON") {
  const ChunkPlan plan = PlanChunks({{0, 70}}, 70, {});
  const auto doc = ChunkPlanToJson(plan, "rec", {});
  CHECK(doc["recording_id"] == "rec");
  CHECK(doc["chunks"].size() == 3);
  CHECK(doc["chunks"][0]["kind"] == "forced");
  CHECK(doc["chunks"][2]["kind"] == "end-of-audio");
  CHECK(doc["forced_split_count"] == 2);
  CHECK(doc["config"]["max_dur"] == 30.0);
}

}  // TEST_SUITE
