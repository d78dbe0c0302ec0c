// src/core/der.cc

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

#include "core/der.h"

#include <algorithm>
#include <cstdint>
#include <tuple>

#include <Eigen/Dense>

#include "core/assignment.h"
#include "core/error.h"

namespace lfs {
namespace {

struct Interval {
  double length;
  std::vector<int32_t> ref;
  std::vector<int32_t> hyp;
};

std::vector<std::string> SpeakersOf(const SpeakerTimeline &t) {
  std::vector<std::string> names;
  for (const auto &s : t.segments) names.push_back(s.speaker);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

int32_t IndexOf(const std::vector<std::string> &names, const std::string &s) {
  return static_cast<int32_t>(
      std::lower_bound(names.begin(), names.end(), s) - names.begin());
}

}  // namespace

DerReport Der(const SpeakerTimeline &ref_in, const SpeakerTimeline &hyp_in,
              const DerOptions &options) {
  if (ref_in.recording_id != hyp_in.recording_id) {
    ThrowStructural("DER needs matching recordings, got '" +
                    ref_in.recording_id + "' and '" + hyp_in.recording_id + "'");
  }
  if (!(options.collar >= 0.0)) ThrowParameter("collar must be >= 0");
  const SpeakerTimeline ref = Normalize(ref_in);
  const SpeakerTimeline hyp = Normalize(hyp_in);
  const std::vector<std::string> ref_names = SpeakersOf(ref);
  const std::vector<std::string> hyp_names = SpeakersOf(hyp);
  const int32_t nr = static_cast<int32_t>(ref_names.size());
  const int32_t nh = static_cast<int32_t>(hyp_names.size());

  // Event kinds: 0 ref speaker, 1 hyp speaker, 2 collar. Each carries +1/-1.
  std::vector<std::tuple<double, int32_t, int32_t, int32_t>> events;
  for (const auto &s : ref.segments) {
    const int32_t id = IndexOf(ref_names, s.speaker);
    events.emplace_back(s.span.start, 0, id, +1);
    events.emplace_back(s.span.end, 0, id, -1);
    if (options.collar > 0.0) {
      for (double b : {s.span.start, s.span.end}) {
        events.emplace_back(b - options.collar, 2, 0, +1);
        events.emplace_back(b + options.collar, 2, 0, -1);
      }
    }
  }
  for (const auto &s : hyp.segments) {
    const int32_t id = IndexOf(hyp_names, s.speaker);
    events.emplace_back(s.span.start, 1, id, +1);
    events.emplace_back(s.span.end, 1, id, -1);
  }
  std::sort(events.begin(), events.end());

  std::vector<int32_t> ref_active(nr, 0), hyp_active(nh, 0);
  int32_t collar_active = 0;
  std::vector<Interval> intervals;
  Eigen::MatrixXd overlap = Eigen::MatrixXd::Zero(nr, nh);
  for (size_t e = 0; e < events.size();) {
    const double t = std::get<0>(events[e]);
    while (e < events.size() && std::get<0>(events[e]) == t) {
      const auto &[time, kind, id, delta] = events[e];
      (void)time;
      if (kind == 0) ref_active[id] += delta;
      if (kind == 1) hyp_active[id] += delta;
      if (kind == 2) collar_active += delta;
      ++e;
    }
    if (e == events.size()) break;
    const double length = std::get<0>(events[e]) - t;
    if (length <= 0.0 || collar_active > 0) continue;
    Interval iv{length, {}, {}};
    for (int32_t i = 0; i < nr; ++i) {
      if (ref_active[i] > 0) iv.ref.push_back(i);
    }
    for (int32_t j = 0; j < nh; ++j) {
      if (hyp_active[j] > 0) iv.hyp.push_back(j);
    }
    if (iv.ref.empty() && iv.hyp.empty()) continue;
    if (options.skip_overlap && iv.ref.size() > 1) continue;
    for (int32_t i : iv.ref) {
      for (int32_t j : iv.hyp) overlap(i, j) += length;
    }
    intervals.push_back(std::move(iv));
  }

  const std::vector<int32_t> assign = OptimalAssignment(-overlap);
  std::vector<int32_t> hyp_to_ref(nh, -1);
  DerReport report;
  for (int32_t i = 0; i < nr; ++i) {
    const int32_t j = assign[i];
    if (j < 0) continue;
    hyp_to_ref[j] = i;
    report.mapping[hyp_names[j]] = ref_names[i];
  }

  for (const auto &iv : intervals) {
    const double r = static_cast<double>(iv.ref.size());
    const double h = static_cast<double>(iv.hyp.size());
    double m = 0.0;
    for (int32_t j : iv.hyp) {
      const int32_t i = hyp_to_ref[j];
      if (i >= 0 && std::binary_search(iv.ref.begin(), iv.ref.end(), i)) m += 1.0;
    }
    report.total_ref += iv.length * r;
    report.missed += iv.length * std::max(0.0, r - h);
    report.false_alarm += iv.length * std::max(0.0, h - r);
    report.confusion += iv.length * (std::min(r, h) - m);
  }
  if (report.total_ref <= 0.0) {
    throw Error(ErrorKind::kUndefinedMetric,
                "DER is undefined: no scored reference speech in '" +
                    ref.recording_id + "'");
  }
  report.der =
      (report.missed + report.false_alarm + report.confusion) / report.total_ref;
  return report;
}

nlohmann::ordered_json DerReportToJson(const DerReport &r) {
  nlohmann::ordered_json j;
  j["missed"] = r.missed;
  j["false_alarm"] = r.false_alarm;
  j["confusion"] = r.confusion;
  j["total_ref"] = r.total_ref;
  j["der"] = r.der;
  nlohmann::ordered_json mapping = nlohmann::ordered_json::object();
  for (const auto &[h, ref] : r.mapping) mapping[h] = ref;
  j["mapping"] = mapping;
  return j;
}

nlohmann::ordered_json DerCorpusToJson(const std::vector<NamedDer> &reports) {
  nlohmann::ordered_json doc;
  auto files = nlohmann::ordered_json::array();
  DerReport total;
  double macro = 0.0;
  for (const auto &[id, r] : reports) {
    nlohmann::ordered_json f;
    f["id"] = id;
    f.update(DerReportToJson(r));
    files.push_back(f);
    total.missed += r.missed;
    total.false_alarm += r.false_alarm;
    total.confusion += r.confusion;
    total.total_ref += r.total_ref;
    macro += r.der;
  }
  doc["recordings"] = files;
  nlohmann::ordered_json corpus;
  corpus["recordings"] = reports.size();
  corpus["missed"] = total.missed;
  corpus["false_alarm"] = total.false_alarm;
  corpus["confusion"] = total.confusion;
  corpus["total_ref"] = total.total_ref;
  if (total.total_ref > 0.0) {
    corpus["micro_der"] =
        (total.missed + total.false_alarm + total.confusion) / total.total_ref;
    corpus["macro_der"] = macro / static_cast<double>(reports.size());
  } else {
    corpus["micro_der"] = nullptr;
    corpus["macro_der"] = nullptr;
  }
  doc["corpus"] = corpus;
  return doc;
}

}  // namespace lfs
