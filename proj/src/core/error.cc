// src/core/error.cc

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

#include "core/error.h"

namespace lfs {

const char *ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParameter:
      return "parameter";
    case ErrorKind::kStructural:
      return "structural";
    case ErrorKind::kFormat:
      return "format";
    case ErrorKind::kIo:
      return "io";
    case ErrorKind::kUndefinedMetric:
      return "undefined-metric";
  }
  return "unknown";
}

void ThrowParameter(const std::string &message) {
  throw Error(ErrorKind::kParameter, message);
}

void ThrowStructural(const std::string &message) {
  throw Error(ErrorKind::kStructural, message);
}

void ThrowFormat(const std::string &message) {
  throw Error(ErrorKind::kFormat, message);
}

}  // namespace lfs
