// src/core/segments-csv.cc

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

#include "core/segments-csv.h"

#include <optional>
#include <regex>

#include "core/error.h"
#include "core/text-util.h"

namespace lfs {
namespace {

const std::regex &TimeRegex() {
  static const std::regex re(R"(^\d+(\.\d+)?$)");
  return re;
}

const std::regex &DigitsRegex() {
  static const std::regex re(R"(^\d+$)");
  return re;
}

struct Row {
  std::string id;
  std::string start;
  std::string end;
  std::string speaker;
  double start_s = 0.0;
  double end_s = 0.0;
};

std::string Join(const std::vector<std::string> &tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ',';
    out += tokens[i];
  }
  return out;
}

bool IsTime(const std::string &s) { return std::regex_match(s, TimeRegex()); }

// Final validity check shared by both modes.
std::optional<Row> Validate(const std::vector<std::string> &tokens) {
  if (tokens.size() != 4) return std::nullopt;
  if (!IsValidLabel(tokens[0]) || !IsValidLabel(tokens[3])) return std::nullopt;
  if (!IsTime(tokens[1]) || !IsTime(tokens[2])) return std::nullopt;
  Row row{tokens[0], tokens[1], tokens[2], tokens[3]};
  row.start_s = *ParseDouble(row.start);
  row.end_s = *ParseDouble(row.end);
  if (row.start_s > row.end_s) return std::nullopt;
  return row;
}

bool TrimWhitespace(std::string *line) {
  static const std::regex around_delims(R"(\s*,\s*)");
  std::string fixed = std::regex_replace(*line, around_delims, ",");
  fixed = std::string(Trim(fixed));
  if (fixed == *line) return false;
  *line = std::move(fixed);
  return true;
}

// "12,5" inside a time field: merges adjacent all-digit inner tokens until
// four fields remain. Abandoned unless the result has two valid times.
bool DecimalComma(std::vector<std::string> *tokens) {
  static const std::regex digit_comma_digit(R"(\d,\d)");
  if (tokens->size() <= 4) return false;
  if (!std::regex_search(Join(*tokens), digit_comma_digit)) return false;
  std::vector<std::string> t = *tokens;
  bool merged = true;
  while (t.size() > 4 && merged) {
    merged = false;
    for (std::size_t j = 1; j + 2 < t.size(); ++j) {
      if (std::regex_match(t[j], DigitsRegex()) &&
          std::regex_match(t[j + 1], DigitsRegex())) {
        t[j] += "." + t[j + 1];
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        merged = true;
        break;
      }
    }
  }
  if (t.size() != 4 || !IsTime(t[1]) || !IsTime(t[2])) return false;
  *tokens = std::move(t);
  return true;
}

bool StripQuotes(std::vector<std::string> *tokens) {
  static const std::regex quoted(R"(^\s*(["'])(.*)\1\s*$)");
  bool fired = false;
  for (auto &tok : *tokens) {
    std::smatch m;
    if (std::regex_match(tok, m, quoted)) {
      tok = std::string(Trim(m[2].str()));
      fired = true;
    }
  }
  return fired;
}

bool SwapTimes(std::vector<std::string> *tokens) {
  if (tokens->size() != 4) return false;
  auto &t = *tokens;
  if (!IsTime(t[1]) || !IsTime(t[2])) return false;
  if (*ParseDouble(t[1]) <= *ParseDouble(t[2])) return false;
  std::swap(t[1], t[2]);
  return true;
}

bool CollapseDelimiters(std::string *line) {
  static const std::regex doubled(R"(,{2,})");
  std::string fixed = std::regex_replace(*line, doubled, ",");
  if (fixed == *line) return false;
  *line = std::move(fixed);
  return true;
}

struct RepairOutcome {
  std::optional<Row> row;
  std::vector<const char *> fired;
};

RepairOutcome Repair(std::string line) {
  RepairOutcome out;
  if (TrimWhitespace(&line)) out.fired.push_back(kRuleTrimWhitespace);
  std::vector<std::string> tokens = SplitOn(line, ',');
  if (DecimalComma(&tokens)) out.fired.push_back(kRuleDecimalComma);
  if (StripQuotes(&tokens)) out.fired.push_back(kRuleStripQuotes);
  if (SwapTimes(&tokens)) out.fired.push_back(kRuleSwapTimes);
  line = Join(tokens);
  if (CollapseDelimiters(&line)) {
    out.fired.push_back(kRuleCollapseDelimiters);
    tokens = SplitOn(line, ',');
    // Misaligned fields hid the time order until now.
    if (SwapTimes(&tokens)) out.fired.push_back(kRuleSwapTimes);
  }
  out.row = Validate(tokens);
  return out;
}

std::string Diagnose(const std::string &line) {
  const RepairOutcome attempt = Repair(line);
  if (!attempt.row) return "unrecoverable row";
  std::string rules;
  for (const char *r : attempt.fired) {
    if (!rules.empty()) rules += ", ";
    rules += r;
  }
  return "malformed row (repairable by: " + rules + ")";
}

}  // namespace

SegmentsCsv ParseSegmentsCsv(std::string_view text, bool strict) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  SegmentsCsv result;
  RepairReport &report = result.report;
  std::vector<SpeakerTimeline> &timelines = result.timelines;
  std::map<std::string, std::size_t> index;

  const auto lines = SplitLines(text);
  bool header_seen = false;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::string line(lines[n]);
    if (Trim(line).empty()) continue;
    const std::string where = "CSV line " + std::to_string(n + 1) + ": ";
    if (!header_seen) {
      header_seen = true;
      if (line == kSegmentsCsvHeader) {
        result.repaired_text += line + "\n";
        continue;
      }
      std::string trimmed = line;
      TrimWhitespace(&trimmed);
      if (strict) {
        ThrowFormat(where + "expected header '" +
                    std::string(kSegmentsCsvHeader) + "'");
      }
      result.repaired_text += std::string(kSegmentsCsvHeader) + "\n";
      if (trimmed == kSegmentsCsvHeader) continue;
      report.header_missing = true;
    }

    ++report.total_lines;
    std::optional<Row> row = Validate(SplitOn(line, ','));
    if (row) {
      ++report.parsed_ok;
      result.repaired_text += line + "\n";
    } else if (strict) {
      ThrowFormat(where + Diagnose(line));
    } else {
      RepairOutcome fixed = Repair(line);
      if (!fixed.row) {
        ++report.dropped;
        report.dropped_lines.push_back(static_cast<int32_t>(n + 1));
        continue;
      }
      ++report.repaired;
      report.repaired_lines.push_back(static_cast<int32_t>(n + 1));
      for (const char *rule : fixed.fired) ++report.rules_fired[rule];
      row = std::move(fixed.row);
      result.repaired_text += Join({row->id, row->start, row->end, row->speaker});
      result.repaired_text += "\n";
    }

    auto it = index.find(row->id);
    if (it == index.end()) {
      it = index.emplace(row->id, timelines.size()).first;
      timelines.push_back({row->id, {}});
    }
    timelines[it->second].segments.push_back(
        {{row->start_s, row->end_s}, row->speaker});
  }
  if (!header_seen && strict && !text.empty()) {
    ThrowFormat("CSV: missing header");
  }
  for (auto &t : timelines) {
    NormalizeStats stats;
    t = Normalize(std::move(t), &stats);
    report.zero_duration_dropped += stats.dropped_zero_duration;
  }
  return result;
}

std::string WriteSegmentsCsv(const std::vector<SpeakerTimeline> &timelines) {
  std::string out(kSegmentsCsvHeader);
  out += '\n';
  for (const auto &t : timelines) {
    for (const auto &seg : t.segments) {
      out += t.recording_id + "," + FormatMillis(seg.span.start) + "," +
             FormatMillis(seg.span.end) + "," + seg.speaker + "\n";
    }
  }
  return out;
}

nlohmann::ordered_json RepairReportToJson(const RepairReport &report) {
  nlohmann::ordered_json doc;
  doc["total_lines"] = report.total_lines;
  doc["parsed_ok"] = report.parsed_ok;
  doc["repaired"] = report.repaired;
  doc["dropped"] = report.dropped;
  doc["zero_duration_dropped"] = report.zero_duration_dropped;
  doc["header_missing"] = report.header_missing;
  doc["rules_fired"] = nlohmann::ordered_json::object();
  for (const auto &[rule, count] : report.rules_fired) {
    doc["rules_fired"][rule] = count;
  }
  doc["repaired_lines"] = report.repaired_lines;
  doc["dropped_lines"] = report.dropped_lines;
  return doc;
}

}  // namespace lfs
