// src/core/time-span.h

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

#ifndef LFSPEECH_CORE_TIME_SPAN_H_
#define LFSPEECH_CORE_TIME_SPAN_H_

#include <span>

namespace lfs {

// Half-open interval [start, end) in seconds.
struct TimeSpan {
  double start = 0.0;
  double end = 0.0;

  double Duration() const { return end - start; }
  bool Contains(double t) const { return start <= t && t < end; }

  friend bool operator==(const TimeSpan &, const TimeSpan &) = default;
};

// 0 <= start < end, both finite.
bool IsValid(const TimeSpan &span);

// Throws a structural error unless spans are valid, sorted by start and
// pairwise disjoint (touching is allowed).
void CheckSortedDisjoint(std::span<const TimeSpan> spans, const char *what);

// Rounds seconds to the nearest millisecond.
double RoundMillis(double seconds);

}  // namespace lfs

#endif  // LFSPEECH_CORE_TIME_SPAN_H_
