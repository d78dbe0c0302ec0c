// src/core/rttm.cc

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

#include "core/rttm.h"

#include <map>

#include "core/error.h"
#include "core/text-util.h"

namespace lfs {

std::vector<SpeakerTimeline> ParseRttm(std::string_view text) {
  std::vector<SpeakerTimeline> timelines;
  std::map<std::string, std::size_t, std::less<>> index;
  const auto lines = SplitLines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto fields = SplitWhitespace(lines[n]);
    if (fields.empty() || fields[0].starts_with(";;")) continue;
    if (fields[0] != "SPEAKER") continue;
    const std::string where = "RTTM line " + std::to_string(n + 1) + ": ";
    if (fields.size() != 10) {
      ThrowFormat(where + "expected 10 fields, got " +
                  std::to_string(fields.size()));
    }
    const auto tbeg = ParseDouble(fields[3]);
    const auto tdur = ParseDouble(fields[4]);
    if (!tbeg || !tdur) ThrowFormat(where + "non-numeric onset or duration");
    if (*tbeg < 0.0 || *tdur < 0.0) {
      ThrowFormat(where + "negative onset or duration");
    }
    const std::string file(fields[1]);
    auto it = index.find(file);
    if (it == index.end()) {
      it = index.emplace(file, timelines.size()).first;
      timelines.push_back({file, {}});
    }
    timelines[it->second].segments.push_back(
        {{*tbeg, *tbeg + *tdur}, std::string(fields[7])});
  }
  for (auto &t : timelines) t = Normalize(std::move(t));
  return timelines;
}

std::string WriteRttm(const std::vector<SpeakerTimeline> &timelines) {
  std::string out;
  for (const auto &t : timelines) {
    for (const auto &seg : t.segments) {
      out += "SPEAKER " + t.recording_id + " 1 " + FormatMillis(seg.span.start) +
             " " + FormatMillis(seg.span.end - seg.span.start) +
             " <NA> <NA> " + seg.speaker + " <NA> <NA>\n";
    }
  }
  return out;
}

}  // namespace lfs
