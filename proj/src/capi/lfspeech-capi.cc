// src/capi/lfspeech-capi.cc

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

#include "lfspeech/lfspeech.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <map>
#include <new>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "core/biquad.h"
#include "core/chunk-planner.h"
#include "core/clustering.h"
#include "core/decode-config.h"
#include "core/der.h"
#include "core/diarize.h"
#include "core/embedding-container.h"
#include "core/error.h"
#include "core/frames.h"
#include "core/resample.h"
#include "core/rttm.h"
#include "core/segments-csv.h"
#include "core/spectral-flux.h"
#include "core/transcripts.h"
#include "core/wav-io.h"
#include "core/waveform.h"
#include "core/wer.h"
#include "core/window-schedule.h"

struct lfs_waveform {
  lfs::Waveform w;
};

struct lfs_chunk_plan {
  lfs::ChunkPlan plan;
};

struct lfs_embedding_set {
  lfs::EmbeddingSet set;
};

struct lfs_timeline_set {
  std::vector<lfs::SpeakerTimeline> timelines;
};

namespace {

thread_local std::string g_last_error;

lfs_status StatusOf(lfs::ErrorKind kind) {
  switch (kind) {
    case lfs::ErrorKind::kParameter:
      return LFS_ERR_PARAMETER;
    case lfs::ErrorKind::kStructural:
      return LFS_ERR_STRUCTURAL;
    case lfs::ErrorKind::kFormat:
      return LFS_ERR_FORMAT;
    case lfs::ErrorKind::kIo:
      return LFS_ERR_IO;
    case lfs::ErrorKind::kUndefinedMetric:
      return LFS_ERR_UNDEFINED_METRIC;
  }
  return LFS_ERR_INTERNAL;
}

template <typename F>
lfs_status Guard(F &&body) {
  try {
    body();
    return LFS_OK;
  } catch (const lfs::Error &e) {
    g_last_error = e.what();
    return StatusOf(e.kind());
  } catch (const std::bad_alloc &) {
    g_last_error = "out of memory";
  } catch (const std::exception &e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return LFS_ERR_INTERNAL;
}

void Require(const void *p, const char *name) {
  if (p == nullptr) lfs::ThrowParameter(std::string(name) + " must not be null");
}

char *CopyString(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

template <typename T>
T *CopyArray(const std::vector<T> &v) {
  T *out = static_cast<T *>(std::malloc(std::max<size_t>(1, v.size()) * sizeof(T)));
  if (out == nullptr) throw std::bad_alloc();
  if (!v.empty()) std::memcpy(out, v.data(), v.size() * sizeof(T));
  return out;
}

std::vector<lfs::TimeSpan> ToSpans(const lfs_span *spans, size_t count) {
  if (count > 0) Require(spans, "spans");
  std::vector<lfs::TimeSpan> out(count);
  for (size_t i = 0; i < count; ++i) out[i] = {spans[i].start, spans[i].end};
  return out;
}

lfs::ChunkConfig ToConfig(const lfs_chunk_options &o) {
  lfs::ChunkConfig c;
  c.min_dur = o.min_dur;
  c.max_dur = o.max_dur;
  c.include_leading_silence = o.include_leading_silence != 0;
  return c;
}

lfs::ClusterOptions ToOptions(const lfs_cluster_options &o) {
  lfs::ClusterOptions c;
  switch (o.method) {
    case LFS_CLUSTER_AHC:
      c.method = lfs::ClusterMethod::kAhc;
      break;
    case LFS_CLUSTER_KMEANS:
      c.method = lfs::ClusterMethod::kKMeans;
      break;
    case LFS_CLUSTER_GMM:
      c.method = lfs::ClusterMethod::kGmm;
      break;
    case LFS_CLUSTER_OVERCLUSTER:
      c.method = lfs::ClusterMethod::kOvercluster;
      break;
    default:
      lfs::ThrowParameter("unknown clustering method");
  }
  c.tau = o.tau;
  c.min_cluster_size = o.min_cluster_size;
  c.pca_components = o.pca_components;
  c.num_clusters = o.num_clusters;
  c.k_min = o.k_min;
  c.k_max = o.k_max;
  if (o.criterion != LFS_CRITERION_AIC && o.criterion != LFS_CRITERION_BIC) {
    lfs::ThrowParameter("unknown information criterion");
  }
  c.criterion = o.criterion == LFS_CRITERION_AIC ? lfs::InformationCriterion::kAic
                                                 : lfs::InformationCriterion::kBic;
  c.restarts = o.restarts;
  c.overcluster_k = o.overcluster_k;
  c.smoothing_window = o.smoothing_window;
  c.seed = o.seed;
  lfs::Validate(c);
  return c;
}

// Adds timelines to dst, fusing recordings that share an id.
void Absorb(std::vector<lfs::SpeakerTimeline> *dst,
            const std::vector<lfs::SpeakerTimeline> &src) {
  for (const auto &t : src) {
    auto it = std::find_if(dst->begin(), dst->end(), [&](const auto &d) {
      return d.recording_id == t.recording_id;
    });
    if (it == dst->end()) {
      dst->push_back(t);
      continue;
    }
    it->segments.insert(it->segments.end(), t.segments.begin(), t.segments.end());
    *it = lfs::Normalize(std::move(*it));
  }
}

const lfs::SpeakerTimeline *Find(const std::vector<lfs::SpeakerTimeline> &v,
                                 const std::string &id) {
  for (const auto &t : v) {
    if (t.recording_id == id) return &t;
  }
  return nullptr;
}

}  // namespace

extern "C" {

const char *lfs_last_error(void) { return g_last_error.c_str(); }

const char *lfs_status_name(lfs_status status) {
  switch (status) {
    case LFS_OK:
      return "ok";
    case LFS_ERR_PARAMETER:
      return "parameter";
    case LFS_ERR_STRUCTURAL:
      return "structural";
    case LFS_ERR_FORMAT:
      return "format";
    case LFS_ERR_IO:
      return "io";
    case LFS_ERR_UNDEFINED_METRIC:
      return "undefined-metric";
    case LFS_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char *lfs_version(void) { return "0.1.0"; }

void lfs_string_free(char *s) { std::free(s); }
void lfs_spans_free(lfs_span *spans) { std::free(spans); }
void lfs_windows_free(lfs_window *windows) { std::free(windows); }

// ---- waveforms

lfs_status lfs_waveform_read(const char *path, lfs_waveform **out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    auto *w = new lfs_waveform{lfs::ReadWavMono(path)};
    *out = w;
  });
}

lfs_status lfs_waveform_create(const float *samples, size_t count,
                               int32_t sample_rate, lfs_waveform **out) {
  return Guard([&] {
    if (count > 0) Require(samples, "samples");
    Require(out, "out");
    lfs::Waveform w;
    w.samples.assign(samples, samples + count);
    w.sample_rate = sample_rate;
    lfs::Validate(w);
    *out = new lfs_waveform{std::move(w)};
  });
}

lfs_status lfs_waveform_write(const lfs_waveform *w, const char *path,
                              int float32) {
  return Guard([&] {
    Require(w, "waveform");
    Require(path, "path");
    lfs::WriteWavFile(path, w->w,
                      float32 ? lfs::WavEncoding::kFloat32 : lfs::WavEncoding::kPcm16);
  });
}

void lfs_waveform_free(lfs_waveform *w) { delete w; }
size_t lfs_waveform_length(const lfs_waveform *w) { return w ? w->w.samples.size() : 0; }
int32_t lfs_waveform_sample_rate(const lfs_waveform *w) { return w ? w->w.sample_rate : 0; }
double lfs_waveform_duration(const lfs_waveform *w) { return w ? w->w.Duration() : 0.0; }
const float *lfs_waveform_samples(const lfs_waveform *w) {
  return w ? w->w.samples.data() : nullptr;
}

lfs_preprocess_options lfs_preprocess_options_default(void) {
  return {16000, 60.0, 0.98};
}

lfs_status lfs_waveform_preprocess(const lfs_waveform *in,
                                   const lfs_preprocess_options *opts,
                                   lfs_waveform **out) {
  return Guard([&] {
    Require(in, "waveform");
    Require(out, "out");
    const lfs_preprocess_options o = opts ? *opts : lfs_preprocess_options_default();
    if (o.target_rate < 0) lfs::ThrowParameter("target_rate must be >= 0");
    if (o.highpass_hz < 0) lfs::ThrowParameter("highpass_hz must be >= 0");
    if (o.peak_target < 0 || o.peak_target > 1) {
      lfs::ThrowParameter("peak_target must lie in [0, 1]");
    }
    lfs::Waveform w = in->w;
    if (o.target_rate > 0) w = lfs::Resample(w, o.target_rate);
    if (o.highpass_hz > 0) w = lfs::Highpass(w, o.highpass_hz);
    if (o.peak_target > 0) w = lfs::PeakNormalize(w, o.peak_target);
    *out = new lfs_waveform{std::move(w)};
  });
}

lfs_silence_options lfs_silence_options_default(void) {
  const lfs::SilenceOptions d;
  return {d.top_db, d.frame_length, d.hop_length};
}

lfs_status lfs_split_on_silence(const lfs_waveform *w,
                                const lfs_silence_options *opts,
                                lfs_span **spans, size_t *count) {
  return Guard([&] {
    Require(w, "waveform");
    Require(spans, "spans");
    Require(count, "count");
    const lfs_silence_options o = opts ? *opts : lfs_silence_options_default();
    lfs::SilenceOptions s;
    s.top_db = o.top_db;
    s.frame_length = o.frame_length;
    s.hop_length = o.hop_length;
    const auto found = lfs::SplitOnSilence(w->w, s);
    std::vector<lfs_span> v;
    for (const auto &t : found) v.push_back({t.start, t.end});
    *spans = CopyArray(v);
    *count = v.size();
  });
}

lfs_music_options lfs_music_options_default(void) {
  const lfs::MusicDetectConfig d;
  return {d.frame_length,    d.hop_length,          d.window_seconds,
          d.flux_threshold,  d.peak_rate_threshold, d.onset_threshold,
          d.decision_threshold, d.min_confident_seconds};
}

lfs_status lfs_detect_music(const lfs_waveform *w, const lfs_music_options *opts,
                            lfs_music_result *result) {
  return Guard([&] {
    Require(w, "waveform");
    Require(result, "result");
    const lfs_music_options o = opts ? *opts : lfs_music_options_default();
    lfs::MusicDetectConfig c;
    c.frame_length = o.frame_length;
    c.hop_length = o.hop_length;
    c.window_seconds = o.window_seconds;
    c.flux_threshold = o.flux_threshold;
    c.peak_rate_threshold = o.peak_rate_threshold;
    c.onset_threshold = o.onset_threshold;
    c.decision_threshold = o.decision_threshold;
    c.min_confident_seconds = o.min_confident_seconds;
    const lfs::MusicPresence p = lfs::DetectMusic(w->w, c);
    *result = {p.score, p.is_music ? 1 : 0, p.low_confidence ? 1 : 0, p.windows,
               p.music_windows};
  });
}

// ---- chunk planning

lfs_chunk_options lfs_chunk_options_default(void) {
  const lfs::ChunkConfig d;
  return {d.min_dur, d.max_dur, d.include_leading_silence ? 1 : 0};
}

lfs_status lfs_chunk_plan_create(const lfs_span *nonsilent, size_t count,
                                 double total_duration,
                                 const lfs_chunk_options *opts,
                                 lfs_chunk_plan **out) {
  return Guard([&] {
    Require(out, "out");
    const lfs_chunk_options o = opts ? *opts : lfs_chunk_options_default();
    *out = new lfs_chunk_plan{
        lfs::PlanChunks(ToSpans(nonsilent, count), total_duration, ToConfig(o))};
  });
}

lfs_status lfs_chunk_plan_fixed(double total_duration, double chunk_seconds,
                                lfs_chunk_plan **out) {
  return Guard([&] {
    Require(out, "out");
    *out = new lfs_chunk_plan{lfs::PlanFixedChunks(total_duration, chunk_seconds)};
  });
}

void lfs_chunk_plan_free(lfs_chunk_plan *plan) { delete plan; }
size_t lfs_chunk_plan_count(const lfs_chunk_plan *plan) {
  return plan ? plan->plan.chunks.size() : 0;
}
int32_t lfs_chunk_plan_forced_splits(const lfs_chunk_plan *plan) {
  return plan ? plan->plan.forced_split_count : 0;
}

lfs_status lfs_chunk_plan_get(const lfs_chunk_plan *plan, size_t index,
                              lfs_span *span, const char **kind) {
  return Guard([&] {
    Require(plan, "plan");
    if (index >= plan->plan.chunks.size()) lfs::ThrowParameter("chunk index out of range");
    const auto &c = plan->plan.chunks[index];
    if (span) *span = {c.start, c.end};
    if (kind) *kind = lfs::BoundaryKindName(plan->plan.kinds[index]);
  });
}

lfs_status lfs_chunk_plan_to_json(const lfs_chunk_plan *plan,
                                  const char *recording_id,
                                  const lfs_chunk_options *opts, char **json) {
  return Guard([&] {
    Require(plan, "plan");
    Require(json, "json");
    const lfs_chunk_options o = opts ? *opts : lfs_chunk_options_default();
    const auto doc = lfs::ChunkPlanToJson(plan->plan, recording_id ? recording_id : "",
                                          ToConfig(o));
    *json = CopyString(doc.dump(2) + "\n");
  });
}

lfs_status lfs_chunk_plan_extract(const lfs_chunk_plan *plan,
                                  const lfs_waveform *w, size_t index,
                                  lfs_waveform **out) {
  return Guard([&] {
    Require(plan, "plan");
    Require(w, "waveform");
    Require(out, "out");
    if (index >= plan->plan.chunks.size()) lfs::ThrowParameter("chunk index out of range");
    lfs::ChunkPlan one = plan->plan;
    one.chunks = {plan->plan.chunks[index]};
    one.kinds = {plan->plan.kinds[index]};
    auto pieces = lfs::ChunkToSamples(one, w->w);
    *out = new lfs_waveform{std::move(pieces.front())};
  });
}

lfs_status lfs_chunk_plan_audit_json(const lfs_chunk_plan *plan,
                                     const char *words_jsonl,
                                     const char *recording_id, char **json) {
  return Guard([&] {
    Require(plan, "plan");
    Require(words_jsonl, "words_jsonl");
    Require(json, "json");
    std::vector<lfs::TimedWord> words;
    for (const auto &r : lfs::ReadTranscriptsJsonl(words_jsonl)) {
      if (recording_id && r.recording_id != recording_id) continue;
      words.push_back({r.text, r.span});
    }
    std::sort(words.begin(), words.end(), [](const auto &a, const auto &b) {
      return a.span.start < b.span.start;
    });
    const auto audit = lfs::AuditBoundaries(words, plan->plan);
    *json = CopyString(lfs::BoundaryAuditToJson(audit).dump(2) + "\n");
  });
}

// ---- embeddings and clustering

lfs_status lfs_embedding_set_read(const char *path, lfs_embedding_set **out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    *out = new lfs_embedding_set{lfs::ReadEmbeddingsFile(path)};
  });
}

lfs_status lfs_embedding_set_create(const char *recording_id, const float *data,
                                    size_t count, uint32_t dim,
                                    const lfs_span *spans,
                                    lfs_embedding_set **out) {
  return Guard([&] {
    Require(out, "out");
    if (count > 0) Require(data, "data");
    lfs::EmbeddingSet set;
    set.recording_id = recording_id ? recording_id : "";
    set.dim = dim;
    set.data.assign(data, data + count * dim);
    set.spans = ToSpans(spans, count);
    lfs::Validate(set);
    *out = new lfs_embedding_set{std::move(set)};
  });
}

lfs_status lfs_embedding_set_write(const lfs_embedding_set *set, const char *path) {
  return Guard([&] {
    Require(set, "set");
    Require(path, "path");
    lfs::WriteEmbeddingsFile(path, set->set);
  });
}

void lfs_embedding_set_free(lfs_embedding_set *set) { delete set; }
size_t lfs_embedding_set_count(const lfs_embedding_set *set) {
  return set ? set->set.size() : 0;
}
uint32_t lfs_embedding_set_dim(const lfs_embedding_set *set) {
  return set ? set->set.dim : 0;
}
const char *lfs_embedding_set_recording_id(const lfs_embedding_set *set) {
  return set ? set->set.recording_id.c_str() : "";
}

lfs_cluster_options lfs_cluster_options_default(void) {
  const lfs::ClusterOptions d;
  lfs_cluster_options o;
  o.method = LFS_CLUSTER_AHC;
  o.tau = d.tau;
  o.min_cluster_size = d.min_cluster_size;
  o.pca_components = d.pca_components;
  o.num_clusters = d.num_clusters;
  o.k_min = d.k_min;
  o.k_max = d.k_max;
  o.criterion = LFS_CRITERION_AIC;
  o.restarts = d.restarts;
  o.overcluster_k = d.overcluster_k;
  o.smoothing_window = d.smoothing_window;
  o.seed = d.seed;
  return o;
}

lfs_status lfs_cluster_method_parse(const char *name, lfs_cluster_method *method) {
  return Guard([&] {
    Require(name, "name");
    Require(method, "method");
    *method = static_cast<lfs_cluster_method>(lfs::ParseClusterMethod(name));
  });
}

lfs_status lfs_cluster_json(const lfs_embedding_set *set,
                            const lfs_cluster_options *opts, char **json) {
  return Guard([&] {
    Require(set, "set");
    Require(json, "json");
    const lfs::ClusterOptions o =
        ToOptions(opts ? *opts : lfs_cluster_options_default());
    lfs::Validate(set->set);
    const auto result = lfs::ClusterEmbeddings(set->set.ToMatrix(), o);
    nlohmann::ordered_json doc;
    doc["recording_id"] = set->set.recording_id;
    doc["options"] = lfs::ClusterOptionsToJson(o);
    doc["result"] = lfs::ClusterResultToJson(result);
    *json = CopyString(doc.dump(2) + "\n");
  });
}

// ---- timelines

lfs_status lfs_timeline_set_create(lfs_timeline_set **out) {
  return Guard([&] {
    Require(out, "out");
    *out = new lfs_timeline_set{};
  });
}

lfs_status lfs_timeline_set_parse(const char *text, lfs_timeline_format format,
                                  int strict, lfs_timeline_set **out) {
  return Guard([&] {
    Require(text, "text");
    Require(out, "out");
    std::vector<lfs::SpeakerTimeline> timelines;
    if (format == LFS_FORMAT_RTTM) {
      timelines = lfs::ParseRttm(text);
    } else if (format == LFS_FORMAT_CSV) {
      timelines = lfs::ParseSegmentsCsv(text, strict != 0).timelines;
    } else {
      lfs::ThrowParameter("unknown timeline format");
    }
    *out = new lfs_timeline_set{std::move(timelines)};
  });
}

lfs_status lfs_timeline_set_append(lfs_timeline_set *dst,
                                   const lfs_timeline_set *src) {
  return Guard([&] {
    Require(dst, "dst");
    Require(src, "src");
    auto merged = dst->timelines;
    Absorb(&merged, src->timelines);
    dst->timelines = std::move(merged);
  });
}

lfs_status lfs_timeline_set_to_text(const lfs_timeline_set *set,
                                    lfs_timeline_format format, char **text) {
  return Guard([&] {
    Require(set, "set");
    Require(text, "text");
    if (format == LFS_FORMAT_RTTM) {
      *text = CopyString(lfs::WriteRttm(set->timelines));
    } else if (format == LFS_FORMAT_CSV) {
      *text = CopyString(lfs::WriteSegmentsCsv(set->timelines));
    } else {
      lfs::ThrowParameter("unknown timeline format");
    }
  });
}

void lfs_timeline_set_free(lfs_timeline_set *set) { delete set; }
size_t lfs_timeline_set_count(const lfs_timeline_set *set) {
  return set ? set->timelines.size() : 0;
}
const char *lfs_timeline_set_recording_id(const lfs_timeline_set *set,
                                          size_t index) {
  if (!set || index >= set->timelines.size()) return nullptr;
  return set->timelines[index].recording_id.c_str();
}
size_t lfs_timeline_set_segment_count(const lfs_timeline_set *set, size_t index) {
  if (!set || index >= set->timelines.size()) return 0;
  return set->timelines[index].segments.size();
}

lfs_status lfs_timeline_set_segment(const lfs_timeline_set *set, size_t index,
                                    size_t segment, lfs_span *span,
                                    const char **speaker) {
  return Guard([&] {
    Require(set, "set");
    if (index >= set->timelines.size()) lfs::ThrowParameter("recording index out of range");
    const auto &segs = set->timelines[index].segments;
    if (segment >= segs.size()) lfs::ThrowParameter("segment index out of range");
    if (span) *span = {segs[segment].span.start, segs[segment].span.end};
    if (speaker) *speaker = segs[segment].speaker.c_str();
  });
}

lfs_status lfs_repair_csv(const char *text, int strict, char **repaired,
                          char **report_json) {
  return Guard([&] {
    Require(text, "text");
    const lfs::SegmentsCsv parsed = lfs::ParseSegmentsCsv(text, strict != 0);
    // Allocate both before handing either out.
    char *r = CopyString(parsed.repaired_text);
    char *j = nullptr;
    try {
      j = CopyString(lfs::RepairReportToJson(parsed.report).dump(2) + "\n");
    } catch (...) {
      std::free(r);
      throw;
    }
    if (repaired) *repaired = r; else std::free(r);
    if (report_json) *report_json = j; else std::free(j);
  });
}

// ---- diarization

lfs_diarize_options lfs_diarize_options_default(void) {
  return {lfs_cluster_options_default(), 0.1};
}

lfs_status lfs_diarize(const lfs_embedding_set *set,
                       const lfs_diarize_options *opts, lfs_timeline_set **out,
                       char **cluster_json) {
  return Guard([&] {
    Require(set, "set");
    Require(out, "out");
    const lfs_diarize_options o = opts ? *opts : lfs_diarize_options_default();
    lfs::DiarizeOptions d;
    d.clustering = ToOptions(o.clustering);
    d.min_duration_off = o.min_duration_off;
    lfs::Diarization result = lfs::Diarize(set->set, d);
    char *j = nullptr;
    if (cluster_json) {
      nlohmann::ordered_json doc;
      doc["recording_id"] = set->set.recording_id;
      doc["options"] = lfs::ClusterOptionsToJson(d.clustering);
      doc["result"] = lfs::ClusterResultToJson(result.clusters);
      j = CopyString(doc.dump(2) + "\n");
    }
    auto *t = new lfs_timeline_set{};
    if (!result.timeline.segments.empty() || !set->set.recording_id.empty()) {
      t->timelines.push_back(std::move(result.timeline));
    }
    *out = t;
    if (cluster_json) *cluster_json = j;
  });
}

lfs_status lfs_window_schedule(const lfs_span *speech, size_t count,
                               double window, double hop, lfs_window **windows,
                               size_t *window_count) {
  return Guard([&] {
    Require(windows, "windows");
    Require(window_count, "window_count");
    const auto spans = ToSpans(speech, count);
    std::vector<lfs_window> v;
    for (const auto &w : lfs::WindowSchedule(spans, window, hop)) {
      v.push_back({{w.span.start, w.span.end}, w.short_window ? 1 : 0});
    }
    *windows = CopyArray(v);
    *window_count = v.size();
  });
}

// ---- scoring

lfs_der_options lfs_der_options_default(void) { return {0.0, 0}; }

lfs_status lfs_score_der(const lfs_timeline_set *ref, const lfs_timeline_set *hyp,
                         const lfs_der_options *opts, char **json) {
  return Guard([&] {
    Require(ref, "ref");
    Require(hyp, "hyp");
    Require(json, "json");
    const lfs_der_options o = opts ? *opts : lfs_der_options_default();
    lfs::DerOptions d;
    d.collar = o.collar;
    d.skip_overlap = o.skip_overlap != 0;
    if (!(d.collar >= 0.0)) lfs::ThrowParameter("collar must be >= 0");

    std::set<std::string> ids;
    for (const auto &t : ref->timelines) ids.insert(t.recording_id);
    std::vector<lfs::NamedDer> scored;
    auto unscored = nlohmann::ordered_json::array();
    for (const auto &id : ids) {
      const lfs::SpeakerTimeline *r = Find(ref->timelines, id);
      lfs::SpeakerTimeline empty;
      empty.recording_id = id;
      const lfs::SpeakerTimeline *h = Find(hyp->timelines, id);
      try {
        scored.push_back({id, lfs::Der(*r, h ? *h : empty, d)});
      } catch (const lfs::Error &e) {
        if (e.kind() != lfs::ErrorKind::kUndefinedMetric) throw;
        unscored.push_back({{"id", id}, {"reason", e.what()}});
      }
    }
    auto unmatched = nlohmann::ordered_json::array();
    std::set<std::string> extra;
    for (const auto &t : hyp->timelines) {
      if (!ids.count(t.recording_id)) extra.insert(t.recording_id);
    }
    for (const auto &id : extra) unmatched.push_back(id);

    nlohmann::ordered_json doc;
    doc["metric"] = "der";
    doc["options"] = {{"collar", d.collar}, {"skip_overlap", d.skip_overlap}};
    doc.update(lfs::DerCorpusToJson(scored));
    doc["unscored"] = unscored;
    doc["unmatched_hypotheses"] = unmatched;
    *json = CopyString(doc.dump(2) + "\n");
  });
}

lfs_status lfs_score_wer(const char *ref_jsonl, const char *hyp_jsonl,
                         int strip_punctuation, char **json) {
  return Guard([&] {
    Require(ref_jsonl, "ref_jsonl");
    Require(hyp_jsonl, "hyp_jsonl");
    Require(json, "json");
    const auto refs = lfs::ReadTranscriptsJsonl(ref_jsonl);
    const auto hyps = lfs::ReadTranscriptsJsonl(hyp_jsonl);
    lfs::TextNormalizeOptions norm;
    norm.strip_punctuation = strip_punctuation != 0;

    std::set<std::string> ids;
    for (const auto &r : refs) ids.insert(r.recording_id);
    std::vector<lfs::NamedWer> scored;
    auto unscored = nlohmann::ordered_json::array();
    for (const auto &id : ids) {
      try {
        scored.push_back({id, lfs::Wer(lfs::JoinTranscript(refs, id),
                                       lfs::JoinTranscript(hyps, id), norm)});
      } catch (const lfs::Error &e) {
        if (e.kind() != lfs::ErrorKind::kUndefinedMetric) throw;
        unscored.push_back({{"id", id}, {"reason", e.what()}});
      }
    }
    auto unmatched = nlohmann::ordered_json::array();
    std::set<std::string> extra;
    for (const auto &h : hyps) {
      if (!ids.count(h.recording_id)) extra.insert(h.recording_id);
    }
    for (const auto &id : extra) unmatched.push_back(id);

    nlohmann::ordered_json doc;
    doc["metric"] = "wer";
    doc["options"] = {{"strip_punctuation", norm.strip_punctuation}};
    doc.update(lfs::WerCorpusToJson(scored));
    doc["unscored"] = unscored;
    doc["unmatched_hypotheses"] = unmatched;
    *json = CopyString(doc.dump(2) + "\n");
  });
}

lfs_status lfs_decode_config_normalize(const char *json_text, char **normalized) {
  return Guard([&] {
    Require(json_text, "json_text");
    Require(normalized, "normalized");
    *normalized = CopyString(lfs::WriteDecodeConfig(lfs::ParseDecodeConfig(json_text)));
  });
}

}  // extern "C"
