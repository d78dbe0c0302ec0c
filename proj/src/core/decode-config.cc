// src/core/decode-config.cc

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

#include "core/decode-config.h"

#include "core/error.h"
#include "json.hpp"

namespace lfs {

void Validate(const DecodeConfig &c) {
  if (c.beams < 1) ThrowParameter("beams must be >= 1");
  if (!(c.repetition_penalty > 0.0)) {
    ThrowParameter("repetition_penalty must be > 0");
  }
  if (c.no_repeat_ngram < 0) ThrowParameter("no_repeat_ngram must be >= 0");
  if (c.do_sample && !(c.temperature > 0.0)) {
    ThrowParameter("temperature must be > 0 when sampling");
  }
}

DecodeConfig ParseDecodeConfig(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception &e) {
    ThrowFormat(std::string("decode config: invalid JSON (") + e.what() + ")");
  }
  if (!doc.is_object()) ThrowFormat("decode config: expected a JSON object");
  DecodeConfig c;
  for (const auto &[key, v] : doc.items()) {
    auto want = [&](bool ok, const char *type) {
      if (!ok) ThrowFormat("decode config: '" + key + "' must be " + type);
    };
    if (key == "beams") {
      want(v.is_number_integer(), "an integer");
      c.beams = v.get<int32_t>();
    } else if (key == "repetition_penalty") {
      want(v.is_number(), "a number");
      c.repetition_penalty = v.get<double>();
    } else if (key == "no_repeat_ngram") {
      want(v.is_number_integer(), "an integer");
      c.no_repeat_ngram = v.get<int32_t>();
    } else if (key == "do_sample") {
      want(v.is_boolean(), "a boolean");
      c.do_sample = v.get<bool>();
    } else if (key == "temperature") {
      want(v.is_number(), "a number");
      c.temperature = v.get<double>();
    } else {
      ThrowFormat("decode config: unknown key '" + key + "'");
    }
  }
  Validate(c);
  return c;
}

std::string WriteDecodeConfig(const DecodeConfig &c) {
  Validate(c);
  nlohmann::ordered_json j;
  j["beams"] = c.beams;
  j["repetition_penalty"] = c.repetition_penalty;
  j["no_repeat_ngram"] = c.no_repeat_ngram;
  j["do_sample"] = c.do_sample;
  j["temperature"] = c.temperature;
  return j.dump(2) + "\n";
}

}  // namespace lfs
