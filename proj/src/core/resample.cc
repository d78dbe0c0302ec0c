// src/core/resample.cc

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

#include "core/resample.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "core/error.h"

namespace lfs {
namespace {

constexpr double kKaiserBeta = 8.6;
constexpr int kTapsPerPhase = 64;
constexpr double kRolloff = 0.9;
constexpr int64_t kMaxTablePhases = 4096;

class SincKernel {
 public:
  SincKernel(int64_t up, int64_t down) : up_(up) {
    const double ratio =
        std::min(1.0, static_cast<double>(up) / static_cast<double>(down));
    cutoff_ = 0.5 * ratio * kRolloff;  // cycles per input sample
    half_width_ = static_cast<int>(std::ceil(0.5 * kTapsPerPhase / ratio));
    norm_ = std::cyl_bessel_i(0.0, kKaiserBeta);
    if (up <= kMaxTablePhases) {
      table_.resize(static_cast<std::size_t>(up) * taps());
      for (int64_t p = 0; p < up; ++p) FillPhase(p, &table_[p * taps()]);
    }
  }

  int taps() const { return 2 * half_width_; }
  int half_width() const { return half_width_; }

  // Weights for input samples base-hw+1 .. base+hw where the output lies at
  // base + phase/up.
  const double *Phase(int64_t phase, std::vector<double> *scratch) const {
    if (!table_.empty()) return &table_[phase * taps()];
    scratch->resize(taps());
    FillPhase(phase, scratch->data());
    return scratch->data();
  }

 private:
  double Tap(double t) const {
    const double x = t / half_width_;
    if (std::fabs(x) >= 1.0) return 0.0;
    const double window =
        std::cyl_bessel_i(0.0, kKaiserBeta * std::sqrt(1.0 - x * x)) / norm_;
    const double arg = 2.0 * cutoff_ * t;
    const double sinc =
        arg == 0.0 ? 1.0
                   : std::sin(std::numbers::pi * arg) / (std::numbers::pi * arg);
    return 2.0 * cutoff_ * sinc * window;
  }

  void FillPhase(int64_t phase, double *out) const {
    const double frac = static_cast<double>(phase) / static_cast<double>(up_);
    double sum = 0.0;
    for (int j = 0; j < taps(); ++j) {
      // Input index base - half_width + 1 + j sits at offset t from output.
      const double t = frac + half_width_ - 1 - j;
      out[j] = Tap(t);
      sum += out[j];
    }
    // Unit DC gain for every phase.
    if (sum != 0.0) {
      for (int j = 0; j < taps(); ++j) out[j] /= sum;
    }
  }

  int64_t up_;
  double cutoff_ = 0.0;
  int half_width_ = 0;
  double norm_ = 1.0;
  std::vector<double> table_;
};

}  // namespace

Waveform Resample(const Waveform &w, int32_t target_hz) {
  if (target_hz <= 0) {
    ThrowParameter("target rate must be positive, got " +
                   std::to_string(target_hz));
  }
  if (w.sample_rate <= 0) ThrowParameter("source rate must be positive");
  if (target_hz == w.sample_rate) return w;

  const int64_t g = std::gcd<int64_t, int64_t>(target_hz, w.sample_rate);
  const int64_t up = target_hz / g;
  const int64_t down = w.sample_rate / g;
  const SincKernel kernel(up, down);

  const int64_t n_in = static_cast<int64_t>(w.samples.size());
  const int64_t n_out = (n_in * up + down - 1) / down;
  Waveform out;
  out.sample_rate = target_hz;
  out.samples.resize(static_cast<std::size_t>(n_out));

  std::vector<double> scratch;
  const int hw = kernel.half_width();
  for (int64_t n = 0; n < n_out; ++n) {
    const int64_t pos = n * down;
    const int64_t base = pos / up;
    const int64_t phase = pos % up;
    const double *h = kernel.Phase(phase, &scratch);
    const int64_t first = base - hw + 1;
    double acc = 0.0;
    const int64_t lo = std::max<int64_t>(first, 0);
    const int64_t hi = std::min<int64_t>(first + kernel.taps(), n_in);
    for (int64_t k = lo; k < hi; ++k) acc += h[k - first] * w.samples[k];
    out.samples[n] = static_cast<float>(acc);
  }
  return out;
}

}  // namespace lfs
