// src/core/frames.h

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

#ifndef LFSPEECH_CORE_FRAMES_H_
#define LFSPEECH_CORE_FRAMES_H_

#include <cstdint>
#include <vector>

#include "core/time-span.h"
#include "core/waveform.h"

namespace lfs {

// Per-frame values. Frame i covers samples [i*hop, i*hop + frame_length);
// there are floor((n - frame_length) / hop) + 1 frames when
// n >= frame_length and none otherwise.
struct FrameSeries {
  std::vector<double> values;
  int32_t frame_length = 0;
  int32_t hop_length = 0;
  int32_t sample_rate = 0;
};

std::size_t NumFrames(std::size_t num_samples, int32_t frame_length,
                      int32_t hop_length);

constexpr double kRmsFloorDb = -100.0;

// 20*log10(RMS) per frame, floored at -100 dB.
FrameSeries FrameRmsDb(const Waveform &w, int32_t frame_length,
                       int32_t hop_length);

struct SilenceOptions {
  double top_db = 25.0;
  int32_t frame_length = 2048;
  int32_t hop_length = 512;
};

// Global frame level at or below this is treated as digital silence.
constexpr double kDigitalSilenceDb = -80.0;

// Maximal non-silent intervals. A frame is non-silent when its level
// exceeds (loudest frame - top_db). Each run of non-silent frames is
// trimmed to the hop-sized blocks at its edges that are themselves above
// the threshold, so edges land within one hop of the true onset/offset.
std::vector<TimeSpan> SplitOnSilence(const Waveform &w,
                                     const SilenceOptions &opts = {});

}  // namespace lfs

#endif  // LFSPEECH_CORE_FRAMES_H_
