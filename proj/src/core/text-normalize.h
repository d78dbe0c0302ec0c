// src/core/text-normalize.h

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

#ifndef LFSPEECH_CORE_TEXT_NORMALIZE_H_
#define LFSPEECH_CORE_TEXT_NORMALIZE_H_

#include <string>
#include <string_view>
#include <vector>

namespace lfs {

struct TextNormalizeOptions {
  // Replace Unicode punctuation with spaces before collapsing whitespace.
  bool strip_punctuation = false;
};

// NFC composition, Unicode whitespace runs collapsed to one ASCII space,
// ends trimmed. Invalid UTF-8 is a format error.
std::string NormalizeText(std::string_view text,
                          const TextNormalizeOptions &options = {});

// NormalizeText followed by a split on spaces.
std::vector<std::string> Tokenize(std::string_view text,
                                  const TextNormalizeOptions &options = {});

}  // namespace lfs

#endif  // LFSPEECH_CORE_TEXT_NORMALIZE_H_
