// src/core/wer.h

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

#ifndef LFSPEECH_CORE_WER_H_
#define LFSPEECH_CORE_WER_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/text-normalize.h"
#include "json.hpp"

namespace lfs {

struct WerReport {
  int64_t substitutions = 0;
  int64_t deletions = 0;
  int64_t insertions = 0;
  int64_t ref_word_count = 0;
  int64_t hyp_word_count = 0;
  double wer = 0.0;
  int64_t Edits() const { return substitutions + deletions + insertions; }
};

// Minimum edit alignment with unit costs. Among minimum-cost alignments the
// one with the most substitutions is reported, which makes the split
// symmetric: swapping ref and hyp exchanges deletions and insertions.
// An empty reference is an undefined-metric error.
WerReport WerTokens(const std::vector<std::string> &ref,
                    const std::vector<std::string> &hyp);

WerReport Wer(std::string_view ref, std::string_view hyp,
              const TextNormalizeOptions &options = {});

nlohmann::ordered_json WerReportToJson(const WerReport &report);

struct NamedWer {
  std::string id;
  WerReport report;
};

// Per-recording reports plus micro (pooled edits over pooled reference
// words) and macro (mean of per-recording WER) averages.
nlohmann::ordered_json WerCorpusToJson(const std::vector<NamedWer> &reports);

}  // namespace lfs

#endif  // LFSPEECH_CORE_WER_H_
