// src/core/transcripts.cc

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

#include "core/transcripts.h"

#include <algorithm>

#include "core/error.h"
#include "core/text-util.h"
#include "json.hpp"

namespace lfs {
namespace {

void SortRecords(std::vector<TranscriptRecord> *records) {
  std::stable_sort(records->begin(), records->end(),
                   [](const TranscriptRecord &a, const TranscriptRecord &b) {
                     if (a.recording_id != b.recording_id) {
                       return a.recording_id < b.recording_id;
                     }
                     return a.span.start < b.span.start;
                   });
}

}  // namespace

std::vector<TranscriptRecord> ReadTranscriptsJsonl(std::string_view text) {
  std::vector<TranscriptRecord> records;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty()) continue;
    auto fail = [&](const std::string &why) {
      ThrowFormat("transcripts line " + std::to_string(line_no) + ": " + why);
    };
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception &e) {
      fail(std::string("invalid JSON (") + e.what() + ")");
    }
    if (!obj.is_object()) fail("expected a JSON object");
    for (const auto &[key, value] : obj.items()) {
      (void)value;
      if (key != "id" && key != "start" && key != "end" && key != "text") {
        fail("unexpected key '" + key + "'");
      }
    }
    for (const char *key : {"id", "start", "end", "text"}) {
      if (!obj.contains(key)) fail(std::string("missing key '") + key + "'");
    }
    if (!obj["id"].is_string()) fail("'id' must be a string");
    if (!obj["text"].is_string()) fail("'text' must be a string");
    if (!obj["start"].is_number() || !obj["end"].is_number()) {
      fail("'start' and 'end' must be numbers");
    }
    TranscriptRecord r;
    r.recording_id = obj["id"].get<std::string>();
    r.span = {obj["start"].get<double>(), obj["end"].get<double>()};
    r.text = obj["text"].get<std::string>();
    if (!IsValid(r.span)) fail("span must satisfy 0 <= start < end");
    records.push_back(std::move(r));
  }
  SortRecords(&records);
  return records;
}

std::string WriteTranscriptsJsonl(std::vector<TranscriptRecord> records) {
  SortRecords(&records);
  std::string out;
  for (const auto &r : records) {
    if (!IsValid(r.span)) {
      ThrowStructural("transcript record for '" + r.recording_id +
                      "' has an invalid span");
    }
    nlohmann::ordered_json obj;
    obj["id"] = r.recording_id;
    obj["start"] = r.span.start;
    obj["end"] = r.span.end;
    obj["text"] = r.text;
    out += obj.dump();
    out += '\n';
  }
  return out;
}

std::string JoinTranscript(const std::vector<TranscriptRecord> &records,
                           const std::string &recording_id) {
  std::vector<const TranscriptRecord *> mine;
  for (const auto &r : records) {
    if (r.recording_id == recording_id) mine.push_back(&r);
  }
  std::stable_sort(mine.begin(), mine.end(),
                   [](const auto *a, const auto *b) { return a->span.start < b->span.start; });
  std::string joined;
  for (const auto *r : mine) {
    if (!joined.empty()) joined += ' ';
    joined += r->text;
  }
  return joined;
}

}  // namespace lfs
