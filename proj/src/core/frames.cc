// src/core/frames.cc

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

#include "core/frames.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/error.h"

namespace lfs {
namespace {

// kRmsFloorDb expressed as mean square.
constexpr double kMeanSquareFloor = 1e-10;

void CheckFraming(int32_t frame_length, int32_t hop_length) {
  if (frame_length < 1 || hop_length < 1) {
    ThrowParameter("frame and hop length must be >= 1, got " +
                   std::to_string(frame_length) + "/" +
                   std::to_string(hop_length));
  }
}

double MeanSquare(const std::vector<float> &x, std::size_t begin,
                  std::size_t end) {
  if (end <= begin) return 0.0;
  double acc = 0.0;
  for (std::size_t i = begin; i < end; ++i) {
    acc += static_cast<double>(x[i]) * x[i];
  }
  return acc / static_cast<double>(end - begin);
}

std::vector<double> FrameMeanSquares(const Waveform &w, int32_t frame_length,
                                     int32_t hop_length) {
  const std::size_t n =
      NumFrames(w.samples.size(), frame_length, hop_length);
  std::vector<double> ms(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t begin = i * hop_length;
    ms[i] = MeanSquare(w.samples, begin, begin + frame_length);
  }
  return ms;
}

}  // namespace

std::size_t NumFrames(std::size_t num_samples, int32_t frame_length,
                      int32_t hop_length) {
  CheckFraming(frame_length, hop_length);
  if (num_samples < static_cast<std::size_t>(frame_length)) return 0;
  return (num_samples - frame_length) / hop_length + 1;
}

FrameSeries FrameRmsDb(const Waveform &w, int32_t frame_length,
                       int32_t hop_length) {
  FrameSeries out;
  out.frame_length = frame_length;
  out.hop_length = hop_length;
  out.sample_rate = w.sample_rate;
  for (double ms : FrameMeanSquares(w, frame_length, hop_length)) {
    // 20*log10(sqrt(ms)) == 10*log10(ms)
    out.values.push_back(ms <= kMeanSquareFloor ? kRmsFloorDb
                                                : 10.0 * std::log10(ms));
  }
  return out;
}

std::vector<TimeSpan> SplitOnSilence(const Waveform &w,
                                     const SilenceOptions &opts) {
  if (!(opts.top_db > 0.0)) {
    ThrowParameter("top_db must be positive, got " +
                   std::to_string(opts.top_db));
  }
  const int32_t frame = opts.frame_length;
  const int32_t hop = opts.hop_length;
  // Thresholding happens on mean squares so that scaling the input by a
  // power of two scales every quantity exactly.
  std::vector<double> ms = FrameMeanSquares(w, frame, hop);
  for (double &v : ms) v = std::max(v, kMeanSquareFloor);
  if (ms.empty()) return {};
  const double loudest = *std::max_element(ms.begin(), ms.end());
  if (loudest <= std::pow(10.0, kDigitalSilenceDb / 10.0)) return {};
  const double threshold = loudest * std::pow(10.0, -opts.top_db / 10.0);

  const std::size_t n = w.samples.size();
  const std::size_t num_blocks = (n + hop - 1) / hop;
  auto block_loud = [&](std::size_t k) {
    const std::size_t begin = k * hop;
    const std::size_t end = std::min(n, begin + hop);
    return std::max(MeanSquare(w.samples, begin, end), kMeanSquareFloor) >
           threshold;
  };

  std::vector<std::pair<std::size_t, std::size_t>> sample_spans;
  for (std::size_t i = 0; i < ms.size();) {
    if (!(ms[i] > threshold)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < ms.size() && ms[j + 1] > threshold) ++j;

    const std::size_t outer_begin = i * hop;
    // A run reaching the final frame also owns the tail shorter than a frame.
    const std::size_t outer_end =
        j + 1 == ms.size() ? n : std::min(n, j * hop + frame);
    std::size_t first = outer_begin / hop;
    std::size_t last = std::min(num_blocks, (outer_end + hop - 1) / hop) - 1;
    while (first <= last && !block_loud(first)) ++first;
    while (last > first && !block_loud(last)) --last;
    std::size_t begin = outer_begin, end = outer_end;
    if (first <= last && block_loud(first)) {
      begin = first * hop;
      end = std::min(n, (last + 1) * hop);
    }
    if (!sample_spans.empty() && begin <= sample_spans.back().second) {
      sample_spans.back().second = std::max(sample_spans.back().second, end);
    } else {
      sample_spans.emplace_back(begin, end);
    }
    i = j + 1;
  }

  std::vector<TimeSpan> spans;
  spans.reserve(sample_spans.size());
  const double rate = w.sample_rate;
  for (const auto &[begin, end] : sample_spans) {
    spans.push_back({begin / rate, end / rate});
  }
  return spans;
}

}  // namespace lfs
