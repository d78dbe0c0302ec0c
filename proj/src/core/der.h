// src/core/der.h

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

#ifndef LFSPEECH_CORE_DER_H_
#define LFSPEECH_CORE_DER_H_

#include <map>
#include <string>
#include <vector>

#include "core/speaker-timeline.h"
#include "json.hpp"

namespace lfs {

struct DerOptions {
  double collar = 0.0;        // seconds excluded on each side of ref boundaries
  bool skip_overlap = false;  // ignore regions with two or more ref speakers
};

struct DerReport {
  double missed = 0.0;
  double false_alarm = 0.0;
  double confusion = 0.0;
  double total_ref = 0.0;  // per-speaker reference time in the scored region
  double der = 0.0;
  std::map<std::string, std::string> mapping;  // hyp speaker -> ref speaker
};

// Sweep over ref and hyp boundaries, optimal one-to-one speaker mapping by
// overlap, then miss / false alarm / confusion per elementary interval.
// Throws a structural error for different recording ids and an
// undefined-metric error when no reference time is scored.
DerReport Der(const SpeakerTimeline &ref, const SpeakerTimeline &hyp,
              const DerOptions &options = {});

nlohmann::ordered_json DerReportToJson(const DerReport &report);

struct NamedDer {
  std::string id;
  DerReport report;
};

// Per-recording reports plus micro (component times pooled before
// dividing) and macro (mean of per-recording DER) averages.
nlohmann::ordered_json DerCorpusToJson(const std::vector<NamedDer> &reports);

}  // namespace lfs

#endif  // LFSPEECH_CORE_DER_H_
