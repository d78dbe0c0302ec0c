// src/core/window-schedule.cc

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

#include "core/window-schedule.h"

#include <algorithm>
#include <cstdint>

#include "core/error.h"

namespace lfs {

namespace {
constexpr double kFitSlack = 1e-9;
}  // namespace

std::vector<ScheduledWindow> WindowSchedule(std::span<const TimeSpan> speech,
                                            double window, double hop) {
  if (!(hop > 0.0 && hop <= window)) {
    ThrowParameter("window schedule needs 0 < hop <= window");
  }
  CheckSortedDisjoint(speech, "speech spans");
  std::vector<ScheduledWindow> out;
  for (const TimeSpan &s : speech) {
    if (s.Duration() + kFitSlack < window) {
      out.push_back({s, true});
      continue;
    }
    for (int64_t i = 0;; ++i) {
      // Multiply rather than accumulate so starts do not drift.
      const double start = s.start + static_cast<double>(i) * hop;
      if (start + window > s.end + kFitSlack) break;
      out.push_back({{start, std::min(start + window, s.end)}, false});
    }
  }
  return out;
}

}  // namespace lfs
