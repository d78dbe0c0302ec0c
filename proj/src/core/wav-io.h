// src/core/wav-io.h

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

#ifndef LFSPEECH_CORE_WAV_IO_H_
#define LFSPEECH_CORE_WAV_IO_H_

#include <cstdint>
#include <string>
#include <vector>

#include "core/waveform.h"

namespace lfs {

// Decoded RIFF/WAVE contents, one vector per channel.
struct WavData {
  std::vector<std::vector<float>> channels;
  int32_t sample_rate = 0;
};

enum class WavEncoding { kPcm16, kFloat32 };

// Accepts PCM 16-bit and IEEE float 32-bit, including the extensible
// header variant. Anything else is rejected with a format error.
WavData DecodeWav(const std::vector<uint8_t> &bytes);
WavData ReadWavFile(const std::string &path);

std::vector<uint8_t> EncodeWav(const Waveform &w, WavEncoding encoding);
void WriteWavFile(const std::string &path, const Waveform &w,
                  WavEncoding encoding);

// Reads and downmixes to mono.
Waveform ReadWavMono(const std::string &path);

std::vector<uint8_t> ReadFileBytes(const std::string &path);
// Writes through a temporary sibling and renames it into place.
void WriteFileAtomic(const std::string &path, const void *data,
                     std::size_t size);

}  // namespace lfs

#endif  // LFSPEECH_CORE_WAV_IO_H_
