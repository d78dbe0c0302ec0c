// src/core/error.h

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

#ifndef LFSPEECH_CORE_ERROR_H_
#define LFSPEECH_CORE_ERROR_H_

#include <stdexcept>
#include <string>

namespace lfs {

enum class ErrorKind {
  kParameter,        // argument outside its documented domain
  kStructural,       // inputs inconsistent with each other
  kFormat,           // malformed serialized data
  kIo,               // file system failure
  kUndefinedMetric,  // metric has no value for these inputs
};

const char *ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void ThrowParameter(const std::string &message);
[[noreturn]] void ThrowStructural(const std::string &message);
[[noreturn]] void ThrowFormat(const std::string &message);

}  // namespace lfs

#endif  // LFSPEECH_CORE_ERROR_H_
