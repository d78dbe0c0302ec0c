// src/core/biquad.h

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

#ifndef LFSPEECH_CORE_BIQUAD_H_
#define LFSPEECH_CORE_BIQUAD_H_

#include "core/waveform.h"

namespace lfs {

// Normalized second-order section (a0 == 1).
struct Biquad {
  double b0 = 1.0, b1 = 0.0, b2 = 0.0;
  double a1 = 0.0, a2 = 0.0;
};

// Second-order Butterworth high-pass via the bilinear transform with
// frequency prewarping. Requires 0 < cutoff_hz < sample_rate / 2.
Biquad ButterworthHighpass(double cutoff_hz, double sample_rate);

// Single causal pass, transposed direct form II, zero initial state.
Waveform ApplyBiquad(const Waveform &w, const Biquad &section);

Waveform Highpass(const Waveform &w, double cutoff_hz);

}  // namespace lfs

#endif  // LFSPEECH_CORE_BIQUAD_H_
