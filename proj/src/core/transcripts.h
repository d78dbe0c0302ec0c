// src/core/transcripts.h

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

#ifndef LFSPEECH_CORE_TRANSCRIPTS_H_
#define LFSPEECH_CORE_TRANSCRIPTS_H_

#include <string>
#include <string_view>
#include <vector>

#include "core/time-span.h"

namespace lfs {

struct TranscriptRecord {
  std::string recording_id;
  TimeSpan span;
  std::string text;
  friend bool operator==(const TranscriptRecord &, const TranscriptRecord &) =
      default;
};

// One JSON object per line with keys id, start, end and text (no others).
// Blank lines are skipped. Records come back sorted by (id, start), stable
// otherwise. Malformed lines are format errors naming the line.
std::vector<TranscriptRecord> ReadTranscriptsJsonl(std::string_view text);

// Sorted by (id, start), one compact object per line.
std::string WriteTranscriptsJsonl(std::vector<TranscriptRecord> records);

// Texts of one recording joined by spaces in start order.
std::string JoinTranscript(const std::vector<TranscriptRecord> &records,
                           const std::string &recording_id);

}  // namespace lfs

#endif  // LFSPEECH_CORE_TRANSCRIPTS_H_
