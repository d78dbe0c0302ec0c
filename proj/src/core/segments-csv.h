// src/core/segments-csv.h

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

#ifndef LFSPEECH_CORE_SEGMENTS_CSV_H_
#define LFSPEECH_CORE_SEGMENTS_CSV_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "core/speaker-timeline.h"
#include "json.hpp"

namespace lfs {

inline constexpr std::string_view kSegmentsCsvHeader = "id,start,end,speaker";

// Repair rules, applied in this order to every data row.
inline constexpr const char *kRuleTrimWhitespace = "trim-whitespace";
inline constexpr const char *kRuleDecimalComma = "decimal-comma";
inline constexpr const char *kRuleStripQuotes = "strip-quotes";
inline constexpr const char *kRuleSwapTimes = "swap-times";
inline constexpr const char *kRuleCollapseDelimiters = "collapse-delimiters";

struct RepairReport {
  int32_t total_lines = 0;  // data rows, header and blank lines excluded
  int32_t parsed_ok = 0;
  int32_t repaired = 0;
  int32_t dropped = 0;
  int32_t zero_duration_dropped = 0;
  bool header_missing = false;
  std::map<std::string, int32_t> rules_fired;
  std::vector<int32_t> repaired_lines;  // 1-based line numbers
  std::vector<int32_t> dropped_lines;
};

struct SegmentsCsv {
  std::vector<SpeakerTimeline> timelines;  // by first appearance of id
  RepairReport report;
  // Input with repaired rows rewritten and dropped rows removed; rows that
  // needed no repair are copied verbatim.
  std::string repaired_text;
};

// Strict mode rejects the first malformed row with a format error naming
// the line and the rule that would have fixed it. Repair mode runs the rules
// (trim whitespace, decimal comma, wrapping quotes, swapped times, doubled
// delimiters) and drops rows still invalid afterwards.
SegmentsCsv ParseSegmentsCsv(std::string_view text, bool strict);

std::string WriteSegmentsCsv(const std::vector<SpeakerTimeline> &timelines);

nlohmann::ordered_json RepairReportToJson(const RepairReport &report);

}  // namespace lfs

#endif  // LFSPEECH_CORE_SEGMENTS_CSV_H_
