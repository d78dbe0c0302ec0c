// src/core/decode-config.h

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

#ifndef LFSPEECH_CORE_DECODE_CONFIG_H_
#define LFSPEECH_CORE_DECODE_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace lfs {

// Decoding settings handed to an external ASR runner. Only validated and
// serialized here.
struct DecodeConfig {
  int32_t beams = 5;
  double repetition_penalty = 0.8;
  int32_t no_repeat_ngram = 0;
  bool do_sample = true;
  double temperature = 1.0;
  friend bool operator==(const DecodeConfig &, const DecodeConfig &) = default;
};

// beams >= 1, repetition_penalty > 0, no_repeat_ngram >= 0, temperature > 0
// when sampling.
void Validate(const DecodeConfig &config);

// Missing keys take defaults; unknown keys and wrong types are format
// errors, invalid values parameter errors.
DecodeConfig ParseDecodeConfig(std::string_view json_text);
std::string WriteDecodeConfig(const DecodeConfig &config);

}  // namespace lfs

#endif  // LFSPEECH_CORE_DECODE_CONFIG_H_
