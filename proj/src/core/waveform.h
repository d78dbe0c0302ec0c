// src/core/waveform.h

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

#ifndef LFSPEECH_CORE_WAVEFORM_H_
#define LFSPEECH_CORE_WAVEFORM_H_

#include <cstdint>
#include <vector>

namespace lfs {

// Mono signal with amplitudes nominally in [-1, 1].
struct Waveform {
  std::vector<float> samples;
  int32_t sample_rate = 16000;

  double Duration() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

// Rate must be positive and all samples finite.
void Validate(const Waveform &w);

// Per-sample arithmetic mean of equally long channels.
Waveform DownmixMono(const std::vector<std::vector<float>> &channels,
                     int32_t sample_rate);

// Scales so that max |sample| == target_peak. All-zero input is returned
// unchanged. Requires 0 < target_peak <= 1.
Waveform PeakNormalize(const Waveform &w, double target_peak);

float PeakAbs(const Waveform &w);

}  // namespace lfs

#endif  // LFSPEECH_CORE_WAVEFORM_H_
