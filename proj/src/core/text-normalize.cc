// src/core/text-normalize.cc

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

#include "core/text-normalize.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/ustring.h>
#include <unicode/utf8.h>

#include "core/error.h"
#include "core/text-util.h"

namespace lfs {

std::string NormalizeText(std::string_view text,
                          const TextNormalizeOptions &options) {
  // Validate first so the error can name a byte offset.
  {
    int32_t i = 0;
    const int32_t n = static_cast<int32_t>(text.size());
    const auto *bytes = reinterpret_cast<const uint8_t *>(text.data());
    while (i < n) {
      const int32_t at = i;
      UChar32 c;
      U8_NEXT(bytes, i, n, c);
      if (c < 0) {
        ThrowFormat("invalid UTF-8 at byte " + std::to_string(at));
      }
    }
  }
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) ThrowFormat("NFC normalizer unavailable");
  const icu::UnicodeString composed = nfc->normalize(
      icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(),
                                                    static_cast<int32_t>(text.size()))),
      status);
  if (U_FAILURE(status)) ThrowFormat("NFC normalization failed");

  icu::UnicodeString collapsed;
  bool pending_space = false;
  for (int32_t i = 0; i < composed.length();) {
    const UChar32 c = composed.char32At(i);
    i += U16_LENGTH(c);
    const bool space =
        u_isUWhiteSpace(c) || (options.strip_punctuation && u_ispunct(c));
    if (space) {
      pending_space = !collapsed.isEmpty();
      continue;
    }
    if (pending_space) collapsed.append(static_cast<UChar>(' '));
    pending_space = false;
    collapsed.append(c);
  }
  std::string out;
  collapsed.toUTF8String(out);
  return out;
}

std::vector<std::string> Tokenize(std::string_view text,
                                  const TextNormalizeOptions &options) {
  const std::string norm = NormalizeText(text, options);
  std::vector<std::string> tokens;
  if (norm.empty()) return tokens;
  return SplitOn(norm, ' ');
}

}  // namespace lfs
