// src/core/spectral-flux.h

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

#ifndef LFSPEECH_CORE_SPECTRAL_FLUX_H_
#define LFSPEECH_CORE_SPECTRAL_FLUX_H_

#include <cstdint>
#include <vector>

#include "core/frames.h"
#include "core/waveform.h"

namespace lfs {

// Magnitude spectra (bins 0..frame_length/2) of Hann-windowed frames.
std::vector<std::vector<double>> MagnitudeFrames(const Waveform &w,
                                                 int32_t frame_length,
                                                 int32_t hop_length);

// flux[t] = sum_k max(0, |X_t(k)| - |X_{t-1}(k)|), flux[0] = 0.
FrameSeries SpectralFlux(const Waveform &w, int32_t frame_length,
                         int32_t hop_length);

struct MusicDetectConfig {
  int32_t frame_length = 1024;
  int32_t hop_length = 256;
  double window_seconds = 1.0;
  // A window votes "music" when the median energy-normalized flux exceeds
  // flux_threshold and its onset-peak rate exceeds peak_rate_threshold.
  double flux_threshold = 0.08;
  double peak_rate_threshold = 1.5;  // peaks per second
  // Minimum normalized flux for a local maximum to count as an onset peak.
  double onset_threshold = 0.15;
  double decision_threshold = 0.5;
  // Inputs shorter than this are scored but flagged low-confidence.
  double min_confident_seconds = 3.0;
};

struct MusicPresence {
  double score = 0.0;  // fraction of windows voting music
  bool is_music = false;
  bool low_confidence = false;
  int32_t windows = 0;
  int32_t music_windows = 0;
};

void Validate(const MusicDetectConfig &config);

// Flux divided by the frame's summed magnitude; invariant to input gain.
std::vector<double> NormalizedFlux(const Waveform &w, int32_t frame_length,
                                   int32_t hop_length);

MusicPresence DetectMusic(const Waveform &w,
                          const MusicDetectConfig &config = {});

}  // namespace lfs

#endif  // LFSPEECH_CORE_SPECTRAL_FLUX_H_
