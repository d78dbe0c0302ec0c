// src/core/text-util.h

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

#ifndef LFSPEECH_CORE_TEXT_UTIL_H_
#define LFSPEECH_CORE_TEXT_UTIL_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lfs {

// Splits on '\n'; a trailing '\r' is kept (callers decide).
std::vector<std::string_view> SplitLines(std::string_view text);

std::vector<std::string_view> SplitWhitespace(std::string_view line);

std::vector<std::string> SplitOn(std::string_view text, char delim);

std::string_view Trim(std::string_view s);

// Full-string decimal parse; nullopt on any trailing garbage.
std::optional<double> ParseDouble(std::string_view s);

// "%.3f"
std::string FormatMillis(double seconds);

}  // namespace lfs

#endif  // LFSPEECH_CORE_TEXT_UTIL_H_
