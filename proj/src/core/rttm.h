// src/core/rttm.h

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

#ifndef LFSPEECH_CORE_RTTM_H_
#define LFSPEECH_CORE_RTTM_H_

#include <string>
#include <string_view>
#include <vector>

#include "core/speaker-timeline.h"

namespace lfs {

// Reads SPEAKER records
//   SPEAKER <file> <chan> <tbeg> <tdur> <NA> <NA> <spk> <NA> <NA>
// grouped by file in order of first appearance, each timeline normalized.
// Blank lines, ";;" comments and other record types are skipped. A SPEAKER
// line with the wrong field count or unparsable times is a format error
// naming the line.
std::vector<SpeakerTimeline> ParseRttm(std::string_view text);

// Times printed with millisecond precision, channel 1.
std::string WriteRttm(const std::vector<SpeakerTimeline> &timelines);

}  // namespace lfs

#endif  // LFSPEECH_CORE_RTTM_H_
