// src/core/spectral-flux.cc

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

#include "core/spectral-flux.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include <unsupported/Eigen/FFT>

#include "core/error.h"

namespace lfs {
namespace {

constexpr double kEnergyEpsilon = 1e-12;

std::vector<double> PeriodicHann(int32_t n) {
  std::vector<double> w(n);
  for (int32_t i = 0; i < n; ++i) {
    w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / n);
  }
  return w;
}

double Median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  if (v.size() % 2 == 1) return v[mid];
  const double upper = v[mid];
  const double lower = *std::max_element(v.begin(), v.begin() + mid);
  return 0.5 * (lower + upper);
}

std::vector<double> FluxFromMagnitudes(
    const std::vector<std::vector<double>> &mags) {
  std::vector<double> flux(mags.size(), 0.0);
  for (std::size_t t = 1; t < mags.size(); ++t) {
    double acc = 0.0;
    for (std::size_t k = 0; k < mags[t].size(); ++k) {
      acc += std::max(0.0, mags[t][k] - mags[t - 1][k]);
    }
    flux[t] = acc;
  }
  return flux;
}

}  // namespace

std::vector<std::vector<double>> MagnitudeFrames(const Waveform &w,
                                                 int32_t frame_length,
                                                 int32_t hop_length) {
  const std::size_t n = NumFrames(w.samples.size(), frame_length, hop_length);
  const std::vector<double> window = PeriodicHann(frame_length);
  const std::size_t bins = frame_length / 2 + 1;
  Eigen::FFT<double> fft;
  std::vector<double> buffer(frame_length);
  std::vector<std::complex<double>> spectrum;
  std::vector<std::vector<double>> mags(n, std::vector<double>(bins));
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t offset = t * hop_length;
    for (int32_t i = 0; i < frame_length; ++i) {
      buffer[i] = w.samples[offset + i] * window[i];
    }
    fft.fwd(spectrum, buffer);
    for (std::size_t k = 0; k < bins; ++k) mags[t][k] = std::abs(spectrum[k]);
  }
  return mags;
}

FrameSeries SpectralFlux(const Waveform &w, int32_t frame_length,
                         int32_t hop_length) {
  FrameSeries out;
  out.frame_length = frame_length;
  out.hop_length = hop_length;
  out.sample_rate = w.sample_rate;
  out.values = FluxFromMagnitudes(MagnitudeFrames(w, frame_length, hop_length));
  return out;
}

std::vector<double> NormalizedFlux(const Waveform &w, int32_t frame_length,
                                   int32_t hop_length) {
  const auto mags = MagnitudeFrames(w, frame_length, hop_length);
  std::vector<double> flux = FluxFromMagnitudes(mags);
  for (std::size_t t = 0; t < flux.size(); ++t) {
    double energy = 0.0;
    for (double m : mags[t]) energy += m;
    flux[t] = energy > kEnergyEpsilon ? flux[t] / energy : 0.0;
  }
  return flux;
}

void Validate(const MusicDetectConfig &c) {
  if (c.frame_length < 2 || c.hop_length < 1) {
    ThrowParameter("music detection frame/hop must be >= 2/1");
  }
  if (!(c.window_seconds > 0.0)) {
    ThrowParameter("music detection window must be positive");
  }
  if (!(c.decision_threshold >= 0.0 && c.decision_threshold <= 1.0)) {
    ThrowParameter("music decision threshold must lie in [0, 1], got " +
                   std::to_string(c.decision_threshold));
  }
}

MusicPresence DetectMusic(const Waveform &w, const MusicDetectConfig &config) {
  Validate(config);
  MusicPresence result;
  result.low_confidence = w.Duration() < config.min_confident_seconds;
  const std::vector<double> nf =
      NormalizedFlux(w, config.frame_length, config.hop_length);
  if (nf.empty()) return result;

  const double frames_per_second =
      static_cast<double>(w.sample_rate) / config.hop_length;
  const std::size_t per_window = std::max<std::size_t>(
      1, static_cast<std::size_t>(
             std::lround(config.window_seconds * frames_per_second)));
  const std::size_t num_windows = std::max<std::size_t>(1, nf.size() / per_window);

  for (std::size_t win = 0; win < num_windows; ++win) {
    const std::size_t begin = win * per_window;
    // The last window absorbs leftover frames.
    const std::size_t end =
        win + 1 == num_windows ? nf.size() : begin + per_window;
    const std::vector<double> slice(nf.begin() + begin, nf.begin() + end);
    std::size_t peaks = 0;
    for (std::size_t t = begin; t < end; ++t) {
      const double prev = t > 0 ? nf[t - 1] : 0.0;
      const double next = t + 1 < nf.size() ? nf[t + 1] : 0.0;
      if (nf[t] >= config.onset_threshold && nf[t] > prev && nf[t] >= next) {
        ++peaks;
      }
    }
    const double seconds = (end - begin) / frames_per_second;
    const bool votes = Median(slice) > config.flux_threshold &&
                       peaks / seconds > config.peak_rate_threshold;
    if (votes) ++result.music_windows;
  }
  result.windows = static_cast<int32_t>(num_windows);
  result.score = static_cast<double>(result.music_windows) / num_windows;
  result.is_music = result.score > config.decision_threshold;
  return result;
}

}  // namespace lfs
