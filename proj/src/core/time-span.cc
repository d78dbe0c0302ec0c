// src/core/time-span.cc

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

#include "core/time-span.h"

#include <cmath>
#include <string>

#include "core/error.h"

namespace lfs {

bool IsValid(const TimeSpan &span) {
  return std::isfinite(span.start) && std::isfinite(span.end) &&
         span.start >= 0.0 && span.start < span.end;
}

void CheckSortedDisjoint(std::span<const TimeSpan> spans, const char *what) {
  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (!IsValid(spans[i])) {
      ThrowStructural(std::string(what) + ": invalid span at index " +
                      std::to_string(i));
    }
    if (i > 0 && spans[i].start < spans[i - 1].end) {
      ThrowStructural(std::string(what) +
                      ": spans overlap or are unsorted at index " +
                      std::to_string(i));
    }
  }
}

double RoundMillis(double seconds) {
  return std::round(seconds * 1000.0) / 1000.0;
}

}  // namespace lfs
