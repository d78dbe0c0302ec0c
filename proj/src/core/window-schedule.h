// src/core/window-schedule.h

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

#ifndef LFSPEECH_CORE_WINDOW_SCHEDULE_H_
#define LFSPEECH_CORE_WINDOW_SCHEDULE_H_

#include <span>
#include <vector>

#include "core/time-span.h"

namespace lfs {

struct ScheduledWindow {
  TimeSpan span;
  bool short_window = false;  // the whole speech span, shorter than window
};

// Sliding windows inside each speech span: starts at start + i*hop for as
// long as the window fits (1e-9 s slack absorbs decimal round-off). A span
// shorter than the window yields a single short window covering it.
// Requires 0 < hop <= window and sorted, disjoint spans.
std::vector<ScheduledWindow> WindowSchedule(std::span<const TimeSpan> speech,
                                            double window, double hop);

}  // namespace lfs

#endif  // LFSPEECH_CORE_WINDOW_SCHEDULE_H_
