// tests/unit/timeline-test.cc

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

#include "core/error.h"
#include "core/rttm.h"
#include "core/segments-csv.h"
#include "core/speaker-timeline.h"
#include "core/text-util.h"
#include "doctest.h"
#include "test-util.h"

using namespace lfs;
using namespace lfs::testing;

namespace {

SpeakerTimeline Tl(std::vector<SpeakerSegment> segs, std::string id = "rec") {
  return {std::move(id), std::move(segs)};
}

// Segment list printed at millisecond precision.
std::string Millis(const std::vector<SpeakerTimeline> &ts) {
  std::string out;
  for (const auto &t : ts) {
    out += t.recording_id + ":";
    for (const auto &s : t.segments) {
      out += " " + s.speaker + "[" + FormatMillis(s.span.start) + "," +
             FormatMillis(s.span.end) + ")";
    }
    out += "\n";
  }
  return out;
}

std::vector<SpeakerTimeline> RandomTimelines(Rng &rng) {
  std::vector<SpeakerTimeline> out;
  const int n = rng.Int(1, 4);
  for (int i = 0; i < n; ++i) {
    out.push_back(Normalize(
        RandomTimeline(rng, "rec" + std::to_string(i), "S", rng.Int(1, 4), 60)));
  }
  return out;
}

}  // namespace

TEST_SUITE("timeline") {

TEST_CASE("RTTM parse") {
  const auto t = ParseRttm("SPEAKER rec1 1 0.50 2.00 <NA> <NA> A <NA> <NA>\n");
  REQUIRE(t.size() == 1);
  CHECK(t[0].recording_id == "rec1");
  REQUIRE(t[0].segments.size() == 1);
  CHECK(t[0].segments[0] == SpeakerSegment{{0.5, 2.5}, "A"});
  CHECK(ParseRttm("").empty());

  const auto two = ParseRttm(
      "SPEAKER b 1 5.0 1.0 <NA> <NA> X <NA> <NA>\n"
      "SPEAKER a 1 3.0 1.0 <NA> <NA> Y <NA> <NA>\n"
      "SPEAKER b 1 1.0 1.0 <NA> <NA> Z <NA> <NA>\n"
      ";; comment\n"
      "SPKR-INFO a 1 <NA> <NA> <NA> unknown Y <NA> <NA>\n"
      "SPEAKER a 1 0.0 1.0 <NA> <NA> Y <NA> <NA>\n");
  REQUIRE(two.size() == 2);
  for (const auto &tl : two) CHECK(IsNormalized(tl));
  CHECK(two[0].recording_id == "b");
  CHECK(two[0].segments.front().speaker == "Z");
  CHECK(two[1].segments.size() == 2);
}

TEST_CASE("RTTM errors name the line") {
  try {
    ParseRttm("SPEAKER a 1 0 1 <NA> <NA> A <NA> <NA>\nSPEAKER a 1 0 1 <NA>\n");
    FAIL("no error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::kFormat);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(ParseRttm("SPEAKER a 1 x 1 <NA> <NA> A <NA> <NA>\n"), Error);
}

TEST_CASE("RTTM write") {
  const auto parsed = ParseRttm("SPEAKER rec1 1 0.50 2.00 <NA> <NA> A <NA> <NA>\n");
  CHECK(ParseRttm(WriteRttm(parsed)) == parsed);
  CHECK(WriteRttm({Tl({{{0, 0.0014}, "A"}})}) ==
        "SPEAKER rec 1 0.000 0.001 <NA> <NA> A <NA> <NA>\n");
  CHECK(WriteRttm({Tl({})}).empty());
  CHECK(WriteRttm({}).empty());
}

TEST_CASE("RTTM and CSV round trips at millisecond precision") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto ts = RandomTimelines(rng);
    const std::string rttm = WriteRttm(ts);
    const auto back = ParseRttm(rttm);
    CHECK(Millis(back) == Millis(ts));
    CHECK(WriteRttm(back) == rttm);

    const std::string csv = WriteSegmentsCsv(ts);
    const SegmentsCsv parsed = ParseSegmentsCsv(csv, true);
    CHECK(parsed.timelines == ts);
    CHECK(WriteSegmentsCsv(parsed.timelines) == csv);
    CHECK(parsed.repaired_text == csv);
  }
}

TEST_CASE("CSV repair examples") {
  const std::string header = "id,start,end,speaker\n";
  const SegmentsCsv a = ParseSegmentsCsv(header + "rec1, 0.0 , 5.2 ,SPK_1\n", false);
  REQUIRE(a.timelines.size() == 1);
  CHECK(a.timelines[0].segments[0] == SpeakerSegment{{0.0, 5.2}, "SPK_1"});
  CHECK(a.report.rules_fired == std::map<std::string, int32_t>{{"trim-whitespace", 1}});
  CHECK(a.report.repaired == 1);

  const SegmentsCsv b = ParseSegmentsCsv(header + "rec1,5.2,0.0,SPK_1\n", false);
  CHECK(b.timelines[0].segments[0].span == TimeSpan{0.0, 5.2});
  CHECK(b.report.rules_fired.at("swap-times") == 1);

  const SegmentsCsv c = ParseSegmentsCsv(header + "rec1,abc,def,SPK_1\n", false);
  CHECK(c.timelines.empty());
  CHECK(c.report.dropped == 1);
  CHECK(c.report.dropped_lines == std::vector<int32_t>{2});

  const SegmentsCsv d = ParseSegmentsCsv(header + "rec1,1,500,2,250,SPK_1\n", false);
  CHECK(d.timelines[0].segments[0].span == TimeSpan{1.5, 2.25});
  CHECK(d.report.rules_fired.at("decimal-comma") == 1);

  const SegmentsCsv e = ParseSegmentsCsv(header + "\"rec1\",1.0,'2.0',SPK_1\n", false);
  CHECK(e.timelines[0].recording_id == "rec1");
  CHECK(e.report.rules_fired.at("strip-quotes") == 1);

  const SegmentsCsv f = ParseSegmentsCsv(header + "rec1,,1.0,2.0,SPK_1\n", false);
  CHECK(f.timelines[0].segments[0].span == TimeSpan{1.0, 2.0});
  CHECK(f.report.rules_fired.at("collapse-delimiters") == 1);
}

TEST_CASE("CSV strict mode") {
  const std::string header = "id,start,end,speaker\n";
  const std::string clean = header + "rec1,0.000,1.000,A\nrec1,2.000,3.000,B\n";
  const SegmentsCsv ok = ParseSegmentsCsv(clean, true);
  CHECK(ok.report.parsed_ok == 2);
  CHECK(ok.report.rules_fired.empty());
  CHECK(ok.repaired_text == clean);
  try {
    ParseSegmentsCsv(header + "rec1,0,1,A\nrec1,5.2,0.0,SPK_1\n", true);
    FAIL("no error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::kFormat);
    const std::string msg = e.what();
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(msg.find("swap-times") != std::string::npos);
  }
  CHECK_THROWS_AS(ParseSegmentsCsv("rec1,0,1,A\n", true), Error);
  const SegmentsCsv no_header = ParseSegmentsCsv("rec1,0,1,A\n", false);
  CHECK(no_header.report.header_missing);
  CHECK(no_header.report.parsed_ok == 1);
}

TEST_CASE("CSV report accounting and repair never touches clean rows") {
  Rng rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    std::string text = "id,start,end,speaker\n";
    for (int i = 0; i < 50; ++i) {
      const std::string row = CleanCsvRow(rng);
      if (rng.Coin(0.05)) {
        text += "garbage,row\n";
      } else if (rng.Coin(0.3)) {
        text += CorruptCsvRow(row, rng.Int(1, 5), rng) + "\n";
      } else {
        text += row + "\n";
      }
    }
    const SegmentsCsv r = ParseSegmentsCsv(text, false);
    const RepairReport &rep = r.report;
    CHECK(rep.parsed_ok + rep.repaired + rep.dropped == rep.total_lines);
    CHECK(rep.repaired == static_cast<int32_t>(rep.repaired_lines.size()));
    CHECK(rep.dropped == static_cast<int32_t>(rep.dropped_lines.size()));
    // Every line strict mode accepts appears verbatim in the output.
    const auto in_lines = SplitLines(text);
    const std::string out = r.repaired_text;
    for (std::size_t n = 1; n < in_lines.size(); ++n) {
      const std::string line(in_lines[n]);
      bool strict_ok = true;
      try {
        ParseSegmentsCsv("id,start,end,speaker\n" + line + "\n", true);
      } catch (const Error &) {
        strict_ok = false;
      }
      const bool listed =
          std::find(rep.repaired_lines.begin(), rep.repaired_lines.end(),
                    static_cast<int32_t>(n + 1)) != rep.repaired_lines.end();
      if (strict_ok) {
        CHECK_FALSE(listed);
        CHECK(out.find(line + "\n") != std::string::npos);
      }
    }
  }
}

TEST_CASE("suppress gaps") {
  const auto a = SuppressGaps(Tl({{{0, 5}, "A"}, {{5.05, 10}, "A"}}), 0.1);
  CHECK(a.segments == std::vector<SpeakerSegment>{{{0, 10}, "A"}});
  const auto ab = Tl({{{0, 5}, "A"}, {{5.05, 10}, "B"}});
  CHECK(SuppressGaps(ab, 0.1) == ab);
  const auto gaps = Tl({{{0, 5}, "A"}, {{5.01, 10}, "A"}});
  CHECK(SuppressGaps(gaps, 0.0) == gaps);
  CHECK_THROWS_AS(SuppressGaps(gaps, -1.0), Error);
}

TEST_CASE("suppress gaps: idempotence and absorbed time") {
  Rng rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const SpeakerTimeline t = Normalize(RandomTimeline(rng, "r", "S", rng.Int(1, 5), 60));
    const double off = rng.Uniform(0, 5);
    const SpeakerTimeline once = SuppressGaps(t, off);
    CHECK(SuppressGaps(once, off) == once);
    CHECK(IsNormalized(once));
    // Oracle: per speaker, input time plus every gap shorter than `off`.
    std::map<std::string, std::vector<TimeSpan>> by;
    for (const auto &s : t.segments) by[s.speaker].push_back(s.span);
    const auto after = SpeechTimePerSpeaker(once);
    for (auto &[spk, spans] : by) {
      double expected = 0;
      for (std::size_t i = 0; i < spans.size(); ++i) {
        expected += spans[i].Duration();
        if (i > 0 && spans[i].start - spans[i - 1].end < off) {
          expected += spans[i].start - spans[i - 1].end;
        }
      }
      CHECK(after.at(spk) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("merge adjacent windows") {
  const std::vector<TimeSpan> w = {{0, 1.5}, {0.75, 2.25}, {1.5, 3.0}, {2.25, 3.75}, {3.0, 4.5}};
  const std::vector<std::string> labels = {"1", "1", "2", "2", "2"};
  const auto t = MergeAdjacentWindows(w, labels, "rec");
  REQUIRE(t.segments.size() == 2);
  CHECK(t.segments[0] == SpeakerSegment{{0, 1.875}, "1"});
  CHECK(t.segments[1] == SpeakerSegment{{1.875, 4.5}, "2"});

  const std::vector<std::string> same(5, "7");
  const auto one = MergeAdjacentWindows(w, same);
  CHECK(one.segments == std::vector<SpeakerSegment>{{{0, 4.5}, "7"}});

  const std::vector<TimeSpan> disjoint = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  const std::vector<std::string> alt = {"a", "b", "a", "b"};
  CHECK(MergeAdjacentWindows(disjoint, alt).segments.size() == 4);
  const std::vector<std::string> all_a(4, "a");
  CHECK(MergeAdjacentWindows(disjoint, all_a).segments.size() == 4);

  const std::vector<std::string> short_labels = {"a"};
  try {
    MergeAdjacentWindows(disjoint, short_labels);
    FAIL("no error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::kStructural);
  }
}

TEST_CASE("merged windows cover exactly the tiled range") {
  Rng rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const double win = rng.Uniform(0.5, 3.0);
    const double hop = win * rng.Uniform(0.2, 1.0);
    const int n = rng.Int(1, 40);
    std::vector<TimeSpan> w;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
      w.push_back({i * hop, i * hop + win});
      labels.push_back(std::to_string(rng.Int(0, 3)));
    }
    const auto t = MergeAdjacentWindows(w, labels);
    CHECK(IsNormalized(t));
    // Union of the output segments, swept left to right.
    std::vector<TimeSpan> spans;
    for (const auto &s : t.segments) spans.push_back(s.span);
    std::sort(spans.begin(), spans.end(),
              [](const TimeSpan &a, const TimeSpan &b) { return a.start < b.start; });
    double reach = spans.front().start;
    CHECK(reach == w.front().start);
    for (const auto &s : spans) {
      CHECK(s.start <= reach + 1e-12);
      reach = std::max(reach, s.end);
    }
    CHECK(reach == doctest::Approx(w.back().end).epsilon(1e-12));
    // Different labels never overlap: segments tile the range.
    double total = 0;
    for (const auto &s : spans) total += s.Duration();
    CHECK(total == doctest::Approx(w.back().end - w.front().start).epsilon(1e-9));
  }
}

TEST_CASE("normalization drops zero-length segments and fuses same-speaker overlap") {
  NormalizeStats stats;
  const auto t = Normalize(Tl({{{2, 2}, "A"}, {{0, 3}, "A"}, {{2, 5}, "A"}, {{1, 4}, "B"}}),
                           &stats);
  CHECK(stats.dropped_zero_duration == 1);
  CHECK(t.segments == std::vector<SpeakerSegment>{{{0, 5}, "A"}, {{1, 4}, "B"}});
  CHECK_THROWS_AS(Normalize(Tl({{{0, 1}, "has space"}})), Error);
  CHECK_THROWS_AS(Normalize(Tl({{{3, 1}, "A"}})), Error);
}

}  // TEST_SUITE
