// src/core/biquad.cc

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

#include "core/biquad.h"

#include <cmath>
#include <numbers>
#include <string>

#include "core/error.h"

namespace lfs {

Biquad ButterworthHighpass(double cutoff_hz, double sample_rate) {
  if (!(cutoff_hz > 0.0 && cutoff_hz < sample_rate / 2.0)) {
    ThrowParameter("high-pass cutoff must lie in (0, Nyquist), got " +
                   std::to_string(cutoff_hz) + " Hz at " +
                   std::to_string(sample_rate) + " Hz");
  }
  const double w0 = 2.0 * std::numbers::pi * cutoff_hz / sample_rate;
  const double cos_w0 = std::cos(w0);
  const double alpha = std::sin(w0) / std::numbers::sqrt2;  // Q = 1/sqrt(2)
  const double a0 = 1.0 + alpha;
  Biquad s;
  s.b0 = (1.0 + cos_w0) / 2.0 / a0;
  s.b1 = -(1.0 + cos_w0) / a0;
  s.b2 = s.b0;
  s.a1 = -2.0 * cos_w0 / a0;
  s.a2 = (1.0 - alpha) / a0;
  return s;
}

Waveform ApplyBiquad(const Waveform &w, const Biquad &s) {
  Waveform out;
  out.sample_rate = w.sample_rate;
  out.samples.resize(w.samples.size());
  double z1 = 0.0, z2 = 0.0;
  for (std::size_t i = 0; i < w.samples.size(); ++i) {
    const double x = w.samples[i];
    const double y = s.b0 * x + z1;
    z1 = s.b1 * x - s.a1 * y + z2;
    z2 = s.b2 * x - s.a2 * y;
    out.samples[i] = static_cast<float>(y);
  }
  return out;
}

Waveform Highpass(const Waveform &w, double cutoff_hz) {
  return ApplyBiquad(w, ButterworthHighpass(cutoff_hz, w.sample_rate));
}

}  // namespace lfs
