// src/core/resample.h

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

#ifndef LFSPEECH_CORE_RESAMPLE_H_
#define LFSPEECH_CORE_RESAMPLE_H_

#include <cstdint>

#include "core/waveform.h"

namespace lfs {

// Band-limited rational resampling with a Kaiser-windowed sinc kernel
// (beta 8.6) spanning 64 taps at the lower of the two rates. The anti-alias
// cutoff sits at 0.9 of the lower Nyquist frequency. Output length is
// ceil(n * target / source); equal rates return an exact copy.
Waveform Resample(const Waveform &w, int32_t target_hz);

}  // namespace lfs

#endif  // LFSPEECH_CORE_RESAMPLE_H_
