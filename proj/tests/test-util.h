// tests/test-util.h

// Copyright 2026  lfspeech contributors

// See ../COPYING for clarification regarding multiple authors
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

#ifndef LFSPEECH_TESTS_TEST_UTIL_H_
#define LFSPEECH_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "core/chunk-planner.h"
#include "core/cluster-result.h"
#include "core/speaker-timeline.h"
#include "core/text-util.h"
#include "core/time-span.h"
#include "core/waveform.h"

namespace lfs::testing {

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  double Uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  int Int(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }
  double Gauss(double mean = 0.0, double sd = 1.0) {
    return std::normal_distribution<double>(mean, sd)(engine_);
  }
  bool Coin(double p = 0.5) { return Uniform() < p; }
  std::mt19937_64 &engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// ---- signals ----

inline Waveform Tone(double hz, int32_t rate, double seconds, double amp = 0.5,
                     double phase = 0.0) {
  Waveform w;
  w.sample_rate = rate;
  const auto n = static_cast<std::size_t>(std::llround(seconds * rate));
  w.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    w.samples[i] = static_cast<float>(
        amp * std::sin(2.0 * std::numbers::pi * hz * i / rate + phase));
  }
  return w;
}

inline Waveform Constant(float value, int32_t rate, double seconds) {
  Waveform w;
  w.sample_rate = rate;
  w.samples.assign(static_cast<std::size_t>(std::llround(seconds * rate)), value);
  return w;
}

inline Waveform Concat(const std::vector<Waveform> &parts) {
  Waveform w;
  w.sample_rate = parts.empty() ? 16000 : parts.front().sample_rate;
  for (const Waveform &p : parts) {
    w.samples.insert(w.samples.end(), p.samples.begin(), p.samples.end());
  }
  return w;
}

inline Waveform Scaled(const Waveform &w, float gain) {
  Waveform out = w;
  for (float &s : out.samples) s *= gain;
  return out;
}

// Overlapping harmonic notes with vibrato: a pair of new notes every 0.125 s,
// each with a 5 ms attack and a 0.4 s exponential decay.
inline Waveform MusicProxy(double seconds, uint64_t seed, int32_t rate = 16000) {
  Rng rng(seed);
  Waveform w;
  w.sample_rate = rate;
  const auto n = static_cast<std::size_t>(seconds * rate);
  std::vector<double> acc(n, 0.0);
  const auto step = static_cast<std::size_t>(0.125 * rate);
  const double decay = 0.4;
  for (std::size_t start = 0; start < n; start += step) {
    for (int k = 0; k < 2; ++k) {
      const double f = 110.0 * std::pow(2.0, rng.Int(0, 36) / 12.0);
      const double vib_phase = rng.Uniform(0.0, 2.0 * std::numbers::pi);
      const std::size_t end = std::min(n, start + static_cast<std::size_t>(6 * decay * rate));
      double phase = 0.0;
      for (std::size_t i = start; i < end; ++i) {
        const double t = static_cast<double>(i - start) / rate;
        const double env = std::min(1.0, t / 0.005) * std::exp(-t / decay);
        const double hz = f * (1.0 + 0.01 * std::sin(2.0 * std::numbers::pi * 5.5 * t + vib_phase));
        phase += 2.0 * std::numbers::pi * hz / rate;
        for (int h = 1; h <= 3; ++h) acc[i] += env * std::sin(h * phase) / h;
      }
    }
  }
  w.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) w.samples[i] = static_cast<float>(0.05 * acc[i]);
  return w;
}

// Band-limited noise bursts (0.15-0.4 s) separated by quiet gaps.
inline Waveform SpeechProxy(double seconds, uint64_t seed, int32_t rate = 16000) {
  Rng rng(seed);
  Waveform w;
  w.sample_rate = rate;
  const auto n = static_cast<std::size_t>(seconds * rate);
  w.samples.assign(n, 0.0f);
  // Two-pole resonator around 800 Hz over white noise.
  const double r = 0.97;
  const double theta = 2.0 * std::numbers::pi * 800.0 / rate;
  const double c1 = 2.0 * r * std::cos(theta), c2 = -r * r;
  double y1 = 0.0, y2 = 0.0;
  std::size_t pos = static_cast<std::size_t>(rng.Uniform(0.05, 0.3) * rate);
  while (pos < n) {
    const auto len = static_cast<std::size_t>(rng.Uniform(0.15, 0.4) * rate);
    const std::size_t end = std::min(n, pos + len);
    for (std::size_t i = pos; i < end; ++i) {
      const double t = static_cast<double>(i - pos) / (end - pos);
      const double env = std::sin(std::numbers::pi * t);
      const double y = rng.Gauss() + c1 * y1 + c2 * y2;
      y2 = y1;
      y1 = y;
      w.samples[i] = static_cast<float>(0.01 * env * y);
    }
    pos = end + static_cast<std::size_t>(rng.Uniform(0.3, 0.9) * rate);
  }
  for (float &s : w.samples) s = std::clamp(s, -1.0f, 1.0f);
  return w;
}

// ---- DSP oracles ----

// Magnitudes of bins 0..n/2 by direct summation, periodic Hann window.
inline std::vector<double> DftMagnitudes(const float *x, int n) {
  std::vector<double> out(n / 2 + 1);
  for (int k = 0; k <= n / 2; ++k) {
    std::complex<double> acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double win = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / n);
      acc += win * x[i] *
             std::polar(1.0, -2.0 * std::numbers::pi * k * i / n);
    }
    out[k] = std::abs(acc);
  }
  return out;
}

inline std::vector<double> DftFlux(const Waveform &w, int frame, int hop) {
  std::vector<double> flux;
  std::vector<double> prev;
  for (std::size_t off = 0; off + frame <= w.samples.size(); off += hop) {
    std::vector<double> mag = DftMagnitudes(w.samples.data() + off, frame);
    double acc = 0.0;
    if (!prev.empty()) {
      for (std::size_t k = 0; k < mag.size(); ++k) {
        acc += std::max(0.0, mag[k] - prev[k]);
      }
    }
    flux.push_back(acc);
    prev = std::move(mag);
  }
  return flux;
}

// Power gain of the bilinear-transform second-order Butterworth high-pass.
inline double ButterworthHighpassPowerGain(double hz, double cutoff, double rate) {
  const double omega = std::tan(std::numbers::pi * hz / rate) /
                       std::tan(std::numbers::pi * cutoff / rate);
  const double o4 = std::pow(omega, 4);
  return o4 / (1.0 + o4);
}

inline int ZeroCrossings(const std::vector<float> &x) {
  int count = 0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if ((x[i - 1] < 0.0f) != (x[i] < 0.0f)) ++count;
  }
  return count;
}

inline double Rms(const std::vector<float> &x, std::size_t begin, std::size_t end) {
  double acc = 0.0;
  for (std::size_t i = begin; i < end; ++i) acc += double(x[i]) * x[i];
  return std::sqrt(acc / (end - begin));
}

inline double Correlation(const std::vector<float> &a, const std::vector<float> &b,
                          std::size_t begin, std::size_t end) {
  double ab = 0.0, aa = 0.0, bb = 0.0;
  for (std::size_t i = begin; i < end; ++i) {
    ab += double(a[i]) * b[i];
    aa += double(a[i]) * a[i];
    bb += double(b[i]) * b[i];
  }
  return ab / std::sqrt(aa * bb);
}

// ---- linear algebra oracle ----

// Cyclic Jacobi rotations; returns eigenvalues in descending order.
inline std::vector<double> JacobiEigenvalues(Eigen::MatrixXd a) {
  const Eigen::Index n = a.rows();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    }
    if (off < 1e-26) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (std::fabs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (Eigen::Index i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

// ---- clustering oracles ----

inline std::vector<int32_t> FirstAppearance(const std::vector<int32_t> &raw) {
  std::map<int32_t, int32_t> ids;
  std::vector<int32_t> out;
  for (int32_t r : raw) {
    auto it = ids.emplace(r, static_cast<int32_t>(ids.size())).first;
    out.push_back(it->second);
  }
  return out;
}

// Straight simulation: clusters are member lists, every step rescans all
// pairs of centroids (means). A cluster is named by its smallest member.
inline std::vector<int32_t> NaiveAhc(const Eigen::MatrixXd &x, double tau,
                                     int min_cluster_size) {
  const int n = static_cast<int>(x.rows());
  std::vector<std::vector<int>> clusters(n);
  for (int i = 0; i < n; ++i) clusters[i] = {i};
  auto mean = [&](const std::vector<int> &m) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(x.cols());
    for (int i : m) c += x.row(i).transpose();
    return Eigen::VectorXd(c / m.size());
  };
  while (true) {
    int best_a = -1, best_b = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int a = 0; a < n; ++a) {
      if (clusters[a].empty()) continue;
      for (int b = 0; b < n; ++b) {
        if (b == a || clusters[b].empty()) continue;
        const double d = CosineDistance(mean(clusters[a]), mean(clusters[b]));
        if (d < best) {
          best = d;
          best_a = a;
          best_b = b;
        }
      }
    }
    if (best_a < 0 || !(best < tau)) break;
    const int keep = std::min(best_a, best_b), drop = std::max(best_a, best_b);
    clusters[keep].insert(clusters[keep].end(), clusters[drop].begin(),
                          clusters[drop].end());
    clusters[drop].clear();
  }
  std::vector<int> survivors;
  int largest = -1;
  for (int c = 0; c < n; ++c) {
    if (clusters[c].empty()) continue;
    if (static_cast<int>(clusters[c].size()) >= min_cluster_size) {
      survivors.push_back(c);
    }
    if (largest < 0 || clusters[c].size() > clusters[largest].size()) largest = c;
  }
  if (survivors.empty()) survivors.push_back(largest);
  std::vector<int32_t> raw(n);
  for (int c = 0; c < n; ++c) {
    for (int i : clusters[c]) raw[i] = c;
  }
  std::vector<Eigen::VectorXd> centres;
  for (int c : survivors) centres.push_back(mean(clusters[c]));
  for (int i = 0; i < n; ++i) {
    if (std::find(survivors.begin(), survivors.end(), raw[i]) != survivors.end()) {
      continue;
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < survivors.size(); ++s) {
      const double d = CosineDistance(x.row(i).transpose(), centres[s]);
      if (d < best) {
        best = d;
        raw[i] = survivors[s];
      }
    }
  }
  return FirstAppearance(raw);
}

// Unit vectors scattered around `centre` with angular noise `spread`.
inline Eigen::VectorXd NoisyUnit(const Eigen::VectorXd &centre, double spread,
                                 Rng &rng) {
  Eigen::VectorXd v = centre;
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] += rng.Gauss(0.0, spread);
  return v.normalized();
}

// ---- assignment oracle ----

inline double BruteForceAssignmentCost(const Eigen::MatrixXd &cost) {
  std::vector<int> perm(cost.cols());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  double best = std::numeric_limits<double>::infinity();
  do {
    double acc = 0.0;
    for (Eigen::Index r = 0; r < cost.rows(); ++r) acc += cost(r, perm[r]);
    best = std::min(best, acc);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// ---- WER oracle ----

struct WerCounts {
  int64_t s = 0, d = 0, i = 0;
  int64_t Edits() const { return s + d + i; }
};

// Memoized recursion over suffixes: fewest edits, then most substitutions.
inline WerCounts WerOracle(const std::vector<std::string> &ref,
                           const std::vector<std::string> &hyp) {
  const std::size_t n = ref.size(), m = hyp.size();
  std::vector<std::vector<std::optional<WerCounts>>> memo(
      n + 1, std::vector<std::optional<WerCounts>>(m + 1));
  auto better = [](const WerCounts &a, const WerCounts &b) {
    if (a.Edits() != b.Edits()) return a.Edits() < b.Edits();
    return a.s > b.s;
  };
  std::function<WerCounts(std::size_t, std::size_t)> go =
      [&](std::size_t i, std::size_t j) -> WerCounts {
    if (memo[i][j]) return *memo[i][j];
    WerCounts best;
    if (i == n) {
      best.i = static_cast<int64_t>(m - j);
    } else if (j == m) {
      best.d = static_cast<int64_t>(n - i);
    } else {
      WerCounts diag = go(i + 1, j + 1);
      if (ref[i] != hyp[j]) ++diag.s;
      WerCounts del = go(i + 1, j);
      ++del.d;
      WerCounts ins = go(i, j + 1);
      ++ins.i;
      best = diag;
      if (better(del, best)) best = del;
      if (better(ins, best)) best = ins;
    }
    memo[i][j] = best;
    return best;
  };
  return go(0, 0);
}

inline std::vector<std::string> RandomTokens(Rng &rng, int max_len, int alphabet) {
  std::vector<std::string> out(rng.Int(0, max_len));
  for (auto &t : out) t = std::string(1, static_cast<char>('a' + rng.Int(0, alphabet - 1)));
  return out;
}

// ---- DER oracle ----

struct FrameDer {
  double missed = 0, false_alarm = 0, confusion = 0, total_ref = 0;
  double Der() const { return (missed + false_alarm + confusion) / total_ref; }
};

// Counts 1 ms frames. Segment times must lie on the millisecond grid so the
// count is exact. The hyp->ref mapping is found by trying every injective map.
inline FrameDer FrameLevelDer(const SpeakerTimeline &ref,
                              const SpeakerTimeline &hyp, double collar = 0.0,
                              bool skip_overlap = false) {
  auto ms = [](double t) { return static_cast<long>(std::llround(t * 1000.0)); };
  std::vector<std::string> rnames, hnames;
  for (const auto &s : ref.segments) rnames.push_back(s.speaker);
  for (const auto &s : hyp.segments) hnames.push_back(s.speaker);
  std::sort(rnames.begin(), rnames.end());
  rnames.erase(std::unique(rnames.begin(), rnames.end()), rnames.end());
  std::sort(hnames.begin(), hnames.end());
  hnames.erase(std::unique(hnames.begin(), hnames.end()), hnames.end());
  auto index = [](const std::vector<std::string> &names, const std::string &s) {
    return static_cast<int>(std::lower_bound(names.begin(), names.end(), s) -
                            names.begin());
  };
  long horizon = 0;
  for (const auto &s : ref.segments) horizon = std::max(horizon, ms(s.span.end));
  for (const auto &s : hyp.segments) horizon = std::max(horizon, ms(s.span.end));
  const long c = ms(collar);
  std::vector<uint32_t> rmask(horizon, 0), hmask(horizon, 0);
  std::vector<bool> scored(horizon, true);
  for (const auto &s : ref.segments) {
    for (long f = ms(s.span.start); f < ms(s.span.end); ++f) {
      rmask[f] |= 1u << index(rnames, s.speaker);
    }
    for (long b : {ms(s.span.start), ms(s.span.end)}) {
      for (long f = std::max(0L, b - c); f < std::min(horizon, b + c); ++f) {
        scored[f] = false;
      }
    }
  }
  for (const auto &s : hyp.segments) {
    for (long f = ms(s.span.start); f < ms(s.span.end); ++f) {
      hmask[f] |= 1u << index(hnames, s.speaker);
    }
  }
  for (long f = 0; f < horizon; ++f) {
    if (skip_overlap && std::popcount(rmask[f]) > 1) scored[f] = false;
  }
  const int R = static_cast<int>(rnames.size()), H = static_cast<int>(hnames.size());
  std::vector<std::vector<long>> overlap(H, std::vector<long>(R, 0));
  for (long f = 0; f < horizon; ++f) {
    if (!scored[f]) continue;
    for (int h = 0; h < H; ++h) {
      if (!(hmask[f] >> h & 1u)) continue;
      for (int r = 0; r < R; ++r) overlap[h][r] += rmask[f] >> r & 1u;
    }
  }
  std::vector<int> map(H, -1), best_map(H, -1);
  long best = -1;
  std::vector<bool> used(R, false);
  std::function<void(int, long)> search = [&](int h, long acc) {
    if (h == H) {
      if (acc > best) {
        best = acc;
        best_map = map;
      }
      return;
    }
    map[h] = -1;
    search(h + 1, acc);
    for (int r = 0; r < R; ++r) {
      if (used[r]) continue;
      used[r] = true;
      map[h] = r;
      search(h + 1, acc + overlap[h][r]);
      used[r] = false;
    }
    map[h] = -1;
  };
  search(0, 0);
  long missed = 0, fa = 0, conf = 0, total = 0;
  for (long f = 0; f < horizon; ++f) {
    if (!scored[f]) continue;
    const int r = std::popcount(rmask[f]), h = std::popcount(hmask[f]);
    int m = 0;
    for (int k = 0; k < H; ++k) {
      if ((hmask[f] >> k & 1u) && best_map[k] >= 0 && (rmask[f] >> best_map[k] & 1u)) {
        ++m;
      }
    }
    total += r;
    missed += std::max(0, r - h);
    fa += std::max(0, h - r);
    conf += std::min(r, h) - m;
  }
  return {missed / 1000.0, fa / 1000.0, conf / 1000.0, total / 1000.0};
}

// Random timeline on the millisecond grid; same-speaker segments disjoint.
inline SpeakerTimeline RandomTimeline(Rng &rng, const std::string &id,
                                      const std::string &prefix, int speakers,
                                      double horizon) {
  SpeakerTimeline t;
  t.recording_id = id;
  // Integer milliseconds, so every time is exactly k / 1000.0.
  auto ms = [&](double lo, double hi) { return std::llround(rng.Uniform(lo, hi) * 1000.0); };
  const long long end = std::llround(horizon * 1000.0);
  for (int s = 0; s < speakers; ++s) {
    long long cursor = ms(0.0, horizon / 4);
    while (true) {
      const long long len = ms(0.2, horizon / 4);
      if (cursor + len > end) break;
      t.segments.push_back(
          {{cursor / 1000.0, (cursor + len) / 1000.0}, prefix + std::to_string(s)});
      cursor += len + ms(0.05, horizon / 3);
    }
  }
  return t;
}

inline SpeakerTimeline Relabeled(SpeakerTimeline t,
                                 const std::map<std::string, std::string> &names) {
  for (auto &s : t.segments) s.speaker = names.at(s.speaker);
  return t;
}

// ---- chunk planner oracle ----

struct HandChunk {
  TimeSpan span;
  std::string kind;
};

// The greedy rule carried out literally: open at the first uncovered
// instant, absorb spans until the chunk reaches min_dur, cut at max_dur.
inline std::vector<HandChunk> HandChunks(const std::vector<TimeSpan> &spans,
                                         double min_dur, double max_dur) {
  std::vector<HandChunk> out;
  std::size_t i = 0;
  double open = spans.empty() ? 0.0 : spans[0].start;
  while (i < spans.size()) {
    open = std::max(open, spans[i].start);
    double end = open;
    while (i < spans.size()) {
      if (spans[i].end - open > max_dur) {
        out.push_back({{open, open + max_dur}, "forced"});
        open += max_dur;
        end = open;
        break;
      }
      end = spans[i].end;
      ++i;
      if (end - open >= min_dur) break;
    }
    if (end > open) {
      out.push_back({{open, end}, end - open >= min_dur ? "silence" : "end-of-audio"});
      open = end;
    }
  }
  return out;
}

// Sorted, disjoint non-silent spans on a 10 ms grid inside [0, total].
inline std::vector<TimeSpan> RandomSpans(Rng &rng, double *total) {
  std::vector<TimeSpan> spans;
  double t = rng.Coin() ? 0.0 : std::round(rng.Uniform(0, 5) * 100) / 100;
  const int count = rng.Int(1, 15);
  for (int i = 0; i < count; ++i) {
    const double len = std::round(rng.Uniform(0.1, rng.Coin(0.2) ? 90 : 15) * 100) / 100;
    spans.push_back({t, t + len});
    t += len + std::round(rng.Uniform(0.01, 3) * 100) / 100;
  }
  *total = spans.back().end + (rng.Coin() ? 0.0 : std::round(rng.Uniform(0, 5) * 100) / 100);
  return spans;
}

// Empty when every plan invariant holds, otherwise the first violation.
inline std::string PlanViolation(const std::vector<TimeSpan> &spans, double total,
                                 const ChunkConfig &cfg, const ChunkPlan &plan) {
  constexpr double kSlack = 1.0 / 16000;  // one sample at 16 kHz
  if (plan.chunks.size() != plan.kinds.size()) return "kind count";
  if (plan.source_duration != total) return "source duration";
  int forced = 0;
  for (std::size_t i = 0; i < plan.chunks.size(); ++i) {
    const TimeSpan &c = plan.chunks[i];
    if (!(c.start < c.end)) return "empty chunk";
    if (c.start < 0 || c.end > total + 1e-9) return "chunk outside source";
    if (i > 0 && plan.chunks[i - 1].end > c.start + 1e-9) return "overlap";
    if (c.Duration() > cfg.max_dur + kSlack) return "max duration";
    const bool last = i + 1 == plan.chunks.size();
    if (plan.kinds[i] == BoundaryKind::kForced) ++forced;
    if (!last && c.Duration() < cfg.min_dur - 1e-9 &&
        plan.kinds[i] != BoundaryKind::kForced) {
      return "short non-final chunk without forced tag";
    }
    if (plan.kinds[i] == BoundaryKind::kSilence) {
      bool hit = false;
      for (const TimeSpan &s : spans) hit |= std::fabs(s.end - c.end) <= 1e-9;
      if (!hit) return "silence tag away from a span end";
    }
    if (plan.kinds[i] == BoundaryKind::kEndOfAudio && !last) {
      return "end-of-audio tag before the end";
    }
  }
  if (forced != plan.forced_split_count) return "forced count";
  // Coverage: every span is inside the union of chunks.
  for (const TimeSpan &s : spans) {
    double covered = s.start;
    for (const TimeSpan &c : plan.chunks) {
      if (c.start <= covered + 1e-9 && c.end > covered) covered = c.end;
    }
    if (covered < s.end - 1e-9) return "span not covered";
  }
  return {};
}

// ---- segments CSV corruption corpus ----

inline std::string CleanCsvRow(Rng &rng) {
  const double start = rng.Int(0, 600000) / 1000.0;
  const double end = start + rng.Int(1, 30000) / 1000.0;
  return "rec" + std::to_string(rng.Int(1, 9)) + "," + FormatMillis(start) + "," +
         FormatMillis(end) + ",SPK_" + std::to_string(rng.Int(0, 22));
}

// Inverse of repair rule `rule` (1 trim, 2 decimal comma, 3 quotes, 4 swap,
// 5 doubled delimiter) applied to a clean row.
inline std::string CorruptCsvRow(const std::string &row, int rule, Rng &rng) {
  std::vector<std::string> f = SplitOn(row, ',');
  auto join = [](const std::vector<std::string> &t, const std::string &sep) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) out += (i ? sep : "") + t[i];
    return out;
  };
  switch (rule) {
    case 1: {
      std::string out;
      for (std::size_t i = 0; i < f.size(); ++i) {
        const std::string pad_l(rng.Int(i == 0 ? 1 : 0, 2), ' ');
        const std::string pad_r(rng.Int(0, 2), rng.Coin() ? ' ' : '\t');
        out += (i ? "," : "") + pad_l + f[i] + pad_r;
      }
      return out;
    }
    case 2: {
      const int which = rng.Int(0, 2);  // start, end or both
      for (int k : {1, 2}) {
        if (which == 2 || which + 1 == k) std::replace(f[k].begin(), f[k].end(), '.', ',');
      }
      return join(f, ",");
    }
    case 3: {
      const char q = rng.Coin() ? '"' : '\'';
      const int k = rng.Int(0, 3);
      f[k] = std::string(1, q) + f[k] + q;
      return join(f, ",");
    }
    case 4:
      std::swap(f[1], f[2]);
      return join(f, ",");
    default: {
      const int k = rng.Int(0, 2);
      std::string out;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += static_cast<int>(i) - 1 == k ? ",," : ",";
        out += f[i];
      }
      return out;
    }
  }
}

}  // namespace lfs::testing

#endif  // LFSPEECH_TESTS_TEST_UTIL_H_
