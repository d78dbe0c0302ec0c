// src/core/waveform.cc

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

#include "core/waveform.h"

#include <cmath>
#include <string>

#include "core/error.h"

namespace lfs {

void Validate(const Waveform &w) {
  if (w.sample_rate <= 0) {
    ThrowParameter("sample rate must be positive, got " +
                   std::to_string(w.sample_rate));
  }
  for (std::size_t i = 0; i < w.samples.size(); ++i) {
    if (!std::isfinite(w.samples[i])) {
      ThrowParameter("non-finite sample at index " + std::to_string(i));
    }
  }
}

Waveform DownmixMono(const std::vector<std::vector<float>> &channels,
                     int32_t sample_rate) {
  if (channels.empty()) ThrowStructural("downmix needs at least one channel");
  const std::size_t n = channels[0].size();
  for (std::size_t c = 1; c < channels.size(); ++c) {
    if (channels[c].size() != n) {
      ThrowStructural("channel " + std::to_string(c) + " has " +
                      std::to_string(channels[c].size()) +
                      " samples, expected " + std::to_string(n));
    }
  }
  Waveform out;
  out.sample_rate = sample_rate;
  if (channels.size() == 1) {
    out.samples = channels[0];
    return out;
  }
  out.samples.resize(n);
  const double scale = 1.0 / static_cast<double>(channels.size());
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (const auto &ch : channels) sum += ch[i];
    out.samples[i] = static_cast<float>(sum * scale);
  }
  return out;
}

float PeakAbs(const Waveform &w) {
  float peak = 0.0f;
  for (float s : w.samples) peak = std::max(peak, std::fabs(s));
  return peak;
}

Waveform PeakNormalize(const Waveform &w, double target_peak) {
  if (!(target_peak > 0.0 && target_peak <= 1.0)) {
    ThrowParameter("peak target must be in (0, 1], got " +
                   std::to_string(target_peak));
  }
  const float peak = PeakAbs(w);
  if (peak == 0.0f || peak == static_cast<float>(target_peak)) return w;
  const double gain = target_peak / peak;
  Waveform out;
  out.sample_rate = w.sample_rate;
  out.samples.resize(w.samples.size());
  for (std::size_t i = 0; i < w.samples.size(); ++i) {
    out.samples[i] = static_cast<float>(w.samples[i] * gain);
  }
  return out;
}

}  // namespace lfs
