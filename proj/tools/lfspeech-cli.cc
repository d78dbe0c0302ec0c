// tools/lfspeech-cli.cc

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

// Command-line front end. Talks to the library only through the C API.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lfspeech/lfspeech.h"

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitConfig = 2;

// Bad configuration: exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A failed library call, carrying its status.
struct CallError : std::runtime_error {
  CallError(lfs_status s, const std::string &what)
      : std::runtime_error(what), status(s) {}
  lfs_status status;
};

int ExitCodeFor(lfs_status s) {
  return s == LFS_ERR_PARAMETER ? kExitConfig : kExitInput;
}

void Check(lfs_status s, const std::string &context = {}) {
  if (s == LFS_OK) return;
  std::string msg = lfs_last_error();
  if (!context.empty()) msg = context + ": " + msg;
  throw CallError(s, msg);
}

struct CString {
  char *p = nullptr;
  ~CString() { lfs_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

template <typename T, void (*Free)(T *)>
struct Handle {
  T *p = nullptr;
  Handle() = default;
  Handle(const Handle &) = delete;
  Handle &operator=(const Handle &) = delete;
  ~Handle() { Free(p); }
};

using Waveform = Handle<lfs_waveform, lfs_waveform_free>;
using ChunkPlan = Handle<lfs_chunk_plan, lfs_chunk_plan_free>;
using Embeddings = Handle<lfs_embedding_set, lfs_embedding_set_free>;
using Timelines = Handle<lfs_timeline_set, lfs_timeline_set_free>;

std::string ReadText(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CallError(LFS_ERR_IO, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw CallError(LFS_ERR_IO, "read failed: " + path);
  return ss.str();
}

void WriteText(const std::string &path, const std::string &text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CallError(LFS_ERR_IO, "cannot create " + tmp);
    out << text;
    if (!out) throw CallError(LFS_ERR_IO, "write failed: " + tmp);
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw CallError(LFS_ERR_IO, "cannot rename into " + path);
}

void EnsureDir(const std::string &dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw CallError(LFS_ERR_IO, "cannot create directory " + dir);
}

// Files named directly plus matching files inside named directories, sorted.
std::vector<std::string> ExpandInputs(const std::vector<std::string> &args,
                                      const std::set<std::string> &extensions) {
  std::set<std::string> out;
  for (const auto &a : args) {
    std::error_code ec;
    if (fs::is_directory(a, ec)) {
      for (const auto &entry : fs::directory_iterator(a, ec)) {
        if (!entry.is_regular_file()) continue;
        std::string ext = entry.path().extension().string();
        std::transform(ext.begin(), ext.end(), ext.begin(), ::tolower);
        if (extensions.count(ext)) out.insert(entry.path().string());
      }
    } else {
      out.insert(a);
    }
  }
  return {out.begin(), out.end()};
}

std::string Stem(const std::string &path) { return fs::path(path).stem().string(); }

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), ::tolower);
  return s;
}

int Workers(int flag) {
  if (flag > 0) return flag;
  if (const char *env = std::getenv("LFSPEECH_WORKERS")) {
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 1024) {
      throw ConfigError(std::string("LFSPEECH_WORKERS must be a positive integer, got '") +
                        env + "'");
    }
    return static_cast<int>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs fn(i) for every i on a pool; results land at their own index, so
// output order never depends on completion order.
template <typename R>
std::vector<R> RunPool(size_t n, int jobs, const std::function<R(size_t)> &fn) {
  std::vector<R> results(n);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < n; i = next++) results[i] = fn(i);
  };
  const int count = static_cast<int>(std::min<size_t>(std::max(1, jobs), n));
  std::vector<std::thread> threads;
  for (int t = 1; t < count; ++t) threads.emplace_back(worker);
  worker();
  for (auto &t : threads) t.join();
  return results;
}

struct FileResult {
  ojson entry;
  int code = kExitOk;
  std::string error;
};

// Per-file wrapper: library failures become an error entry.
FileResult Protect(const std::string &path, const std::function<ojson()> &body) {
  FileResult r;
  try {
    r.entry = body();
  } catch (const CallError &e) {
    r.code = ExitCodeFor(e.status);
    r.error = e.what();
    r.entry = {{"path", path}, {"error", e.what()}, {"kind", lfs_status_name(e.status)}};
  } catch (const std::exception &e) {
    r.code = kExitInput;
    r.error = path + ": " + e.what();
    r.entry = {{"path", path}, {"error", r.error}, {"kind", "internal"}};
  }
  return r;
}

int Finish(const std::vector<FileResult> &results) {
  int code = kExitOk;
  for (const auto &r : results) {
    if (r.code == kExitOk) continue;
    std::cerr << "error: " << r.error << "\n";
    code = std::max(code, r.code);
  }
  return code;
}

void Emit(const std::string &out_path, const std::string &text) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    WriteText(out_path, text);
  }
}

std::string Dump(const ojson &j) { return j.dump(2) + "\n"; }

// ---- configuration

struct PipelineConfig {
  lfs_chunk_options chunking = lfs_chunk_options_default();
  lfs_silence_options silence = lfs_silence_options_default();
  lfs_preprocess_options preprocess = lfs_preprocess_options_default();
  bool detect_music = false;
  lfs_music_options music = lfs_music_options_default();
  lfs_cluster_options clustering = lfs_cluster_options_default();
  double min_duration_off = 0.1;
  double window = 1.5;
  double hop = 0.75;
  lfs_der_options der = lfs_der_options_default();
  bool strip_punctuation = false;
};

const char *MethodName(lfs_cluster_method m) {
  switch (m) {
    case LFS_CLUSTER_AHC:
      return "ahc";
    case LFS_CLUSTER_KMEANS:
      return "kmeans";
    case LFS_CLUSTER_GMM:
      return "gmm";
    case LFS_CLUSTER_OVERCLUSTER:
      return "overcluster";
  }
  return "?";
}

lfs_cluster_method ParseMethod(const std::string &name) {
  lfs_cluster_method m;
  if (lfs_cluster_method_parse(name.c_str(), &m) != LFS_OK) {
    throw ConfigError(lfs_last_error());
  }
  return m;
}

lfs_criterion ParseCriterion(const std::string &name) {
  const std::string n = Lower(name);
  if (n == "aic") return LFS_CRITERION_AIC;
  if (n == "bic") return LFS_CRITERION_BIC;
  throw ConfigError("criterion must be 'aic' or 'bic', got '" + name + "'");
}

// Reads the keys of one JSON object, rejecting any it does not know.
class Section {
 public:
  Section(const nlohmann::json &parent, const std::string &name) : name_(name) {
    if (!parent.contains(name)) return;
    node_ = &parent.at(name);
    if (!node_->is_object()) throw ConfigError("config section '" + name + "' must be an object");
  }
  ~Section() noexcept(false) {
    if (!node_ || std::uncaught_exceptions() > 0) return;
    for (const auto &[key, v] : node_->items()) {
      (void)v;
      if (!used_.count(key)) throw ConfigError("unknown config key '" + name_ + "." + key + "'");
    }
  }

  template <typename T>
  void Get(const std::string &key, T *out) {
    used_.insert(key);
    if (!node_ || !node_->contains(key)) return;
    const auto &v = node_->at(key);
    const std::string where = "config key '" + name_ + "." + key + "'";
    if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) throw ConfigError(where + " must be a boolean");
    } else if constexpr (std::is_integral_v<T>) {
      if (!v.is_number_integer()) throw ConfigError(where + " must be an integer");
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!v.is_number()) throw ConfigError(where + " must be a number");
    } else {
      if (!v.is_string()) throw ConfigError(where + " must be a string");
    }
    *out = v.get<T>();
  }

  Section Child(const std::string &key) {
    used_.insert(key);
    if (!node_) return Section(nlohmann::json::object(), key);
    return Section(*node_, key, name_ + "." + key);
  }

 private:
  Section(const nlohmann::json &parent, const std::string &key, const std::string &full)
      : name_(full) {
    if (!parent.contains(key)) return;
    node_ = &parent.at(key);
    if (!node_->is_object()) throw ConfigError("config section '" + full + "' must be an object");
  }

  std::string name_;
  const nlohmann::json *node_ = nullptr;
  std::set<std::string> used_;
};

PipelineConfig LoadConfig(const std::string &path) {
  PipelineConfig c;
  if (path.empty()) return c;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(ReadText(path));
  } catch (const CallError &e) {
    throw ConfigError(e.what());
  } catch (const nlohmann::json::exception &e) {
    throw ConfigError(path + ": invalid JSON (" + e.what() + ")");
  }
  if (!doc.is_object()) throw ConfigError(path + ": config must be a JSON object");
  static const std::set<std::string> kSections = {
      "chunking", "silence", "preprocess", "clustering", "diarization", "metrics"};
  for (const auto &[key, v] : doc.items()) {
    (void)v;
    if (!kSections.count(key)) throw ConfigError("unknown config section '" + key + "'");
  }
  {
    Section s(doc, "chunking");
    s.Get("min_dur", &c.chunking.min_dur);
    s.Get("max_dur", &c.chunking.max_dur);
    bool lead = c.chunking.include_leading_silence != 0;
    s.Get("include_leading_silence", &lead);
    c.chunking.include_leading_silence = lead ? 1 : 0;
  }
  {
    Section s(doc, "silence");
    s.Get("top_db", &c.silence.top_db);
    s.Get("frame_length", &c.silence.frame_length);
    s.Get("hop_length", &c.silence.hop_length);
  }
  {
    Section s(doc, "preprocess");
    s.Get("target_rate", &c.preprocess.target_rate);
    s.Get("highpass_hz", &c.preprocess.highpass_hz);
    s.Get("peak_target", &c.preprocess.peak_target);
    s.Get("detect_music", &c.detect_music);
    Section m = s.Child("music");
    m.Get("frame_length", &c.music.frame_length);
    m.Get("hop_length", &c.music.hop_length);
    m.Get("window_seconds", &c.music.window_seconds);
    m.Get("flux_threshold", &c.music.flux_threshold);
    m.Get("peak_rate_threshold", &c.music.peak_rate_threshold);
    m.Get("onset_threshold", &c.music.onset_threshold);
    m.Get("decision_threshold", &c.music.decision_threshold);
    m.Get("min_confident_seconds", &c.music.min_confident_seconds);
  }
  {
    Section s(doc, "clustering");
    std::string method = MethodName(c.clustering.method);
    s.Get("method", &method);
    c.clustering.method = ParseMethod(method);
    s.Get("tau", &c.clustering.tau);
    s.Get("min_cluster_size", &c.clustering.min_cluster_size);
    s.Get("pca_components", &c.clustering.pca_components);
    s.Get("num_clusters", &c.clustering.num_clusters);
    s.Get("k_min", &c.clustering.k_min);
    s.Get("k_max", &c.clustering.k_max);
    std::string criterion = "aic";
    s.Get("criterion", &criterion);
    c.clustering.criterion = ParseCriterion(criterion);
    s.Get("restarts", &c.clustering.restarts);
    s.Get("overcluster_k", &c.clustering.overcluster_k);
    s.Get("smoothing_window", &c.clustering.smoothing_window);
    s.Get("seed", &c.clustering.seed);
  }
  {
    Section s(doc, "diarization");
    s.Get("min_duration_off", &c.min_duration_off);
    s.Get("window", &c.window);
    s.Get("hop", &c.hop);
  }
  {
    Section s(doc, "metrics");
    s.Get("collar", &c.der.collar);
    bool skip = c.der.skip_overlap != 0;
    s.Get("skip_overlap", &skip);
    c.der.skip_overlap = skip ? 1 : 0;
    s.Get("strip_punctuation", &c.strip_punctuation);
  }
  return c;
}

ojson ConfigToJson(const PipelineConfig &c) {
  ojson j;
  j["chunking"] = {{"min_dur", c.chunking.min_dur},
                   {"max_dur", c.chunking.max_dur},
                   {"include_leading_silence", c.chunking.include_leading_silence != 0}};
  j["silence"] = {{"top_db", c.silence.top_db},
                  {"frame_length", c.silence.frame_length},
                  {"hop_length", c.silence.hop_length}};
  j["preprocess"] = {
      {"target_rate", c.preprocess.target_rate},
      {"highpass_hz", c.preprocess.highpass_hz},
      {"peak_target", c.preprocess.peak_target},
      {"detect_music", c.detect_music},
      {"music",
       {{"frame_length", c.music.frame_length},
        {"hop_length", c.music.hop_length},
        {"window_seconds", c.music.window_seconds},
        {"flux_threshold", c.music.flux_threshold},
        {"peak_rate_threshold", c.music.peak_rate_threshold},
        {"onset_threshold", c.music.onset_threshold},
        {"decision_threshold", c.music.decision_threshold},
        {"min_confident_seconds", c.music.min_confident_seconds}}}};
  const auto &k = c.clustering;
  j["clustering"] = {{"method", MethodName(k.method)},
                     {"tau", k.tau},
                     {"min_cluster_size", k.min_cluster_size},
                     {"pca_components", k.pca_components},
                     {"num_clusters", k.num_clusters},
                     {"k_min", k.k_min},
                     {"k_max", k.k_max},
                     {"criterion", k.criterion == LFS_CRITERION_AIC ? "aic" : "bic"},
                     {"restarts", k.restarts},
                     {"overcluster_k", k.overcluster_k},
                     {"smoothing_window", k.smoothing_window},
                     {"seed", k.seed}};
  j["diarization"] = {{"min_duration_off", c.min_duration_off},
                      {"window", c.window},
                      {"hop", c.hop}};
  j["metrics"] = {{"collar", c.der.collar},
                  {"skip_overlap", c.der.skip_overlap != 0},
                  {"strip_punctuation", c.strip_punctuation}};
  return j;
}

// Cheap library calls that reject invalid settings before any file is
// touched, so bad values surface as configuration errors.
void Preflight(const PipelineConfig &c) {
  auto check = [](lfs_status s) {
    if (s != LFS_OK) throw ConfigError(lfs_last_error());
  };
  {
    ChunkPlan plan;
    check(lfs_chunk_plan_create(nullptr, 0, 0.0, &c.chunking, &plan.p));
  }
  {
    const float zero[1] = {0.0f};
    Waveform w;
    check(lfs_waveform_create(zero, 1, 16000, &w.p));
    Waveform pre;
    check(lfs_waveform_preprocess(w.p, &c.preprocess, &pre.p));
    lfs_span *spans = nullptr;
    size_t n = 0;
    check(lfs_split_on_silence(w.p, &c.silence, &spans, &n));
    lfs_spans_free(spans);
    lfs_music_result r;
    check(lfs_detect_music(w.p, &c.music, &r));
  }
  {
    Embeddings e;
    check(lfs_embedding_set_create("", nullptr, 0, 0, nullptr, &e.p));
    CString json;
    check(lfs_cluster_json(e.p, &c.clustering, &json.p));
    lfs_diarize_options d = lfs_diarize_options_default();
    d.clustering = c.clustering;
    d.min_duration_off = c.min_duration_off;
    Timelines t;
    check(lfs_diarize(e.p, &d, &t.p, nullptr));
  }
  {
    lfs_window *w = nullptr;
    size_t n = 0;
    check(lfs_window_schedule(nullptr, 0, c.window, c.hop, &w, &n));
    lfs_windows_free(w);
  }
  if (!(c.der.collar >= 0.0)) throw ConfigError("metrics.collar must be >= 0");
}

ojson SpansToJson(const lfs_span *spans, size_t n) {
  ojson a = ojson::array();
  for (size_t i = 0; i < n; ++i) a.push_back({{"start", spans[i].start}, {"end", spans[i].end}});
  return a;
}

// Read, resample, high-pass and normalize.
void LoadAudio(const std::string &path, const PipelineConfig &c, Waveform *out) {
  Waveform raw;
  Check(lfs_waveform_read(path.c_str(), &raw.p), path);
  Check(lfs_waveform_preprocess(raw.p, &c.preprocess, &out->p), path);
}

ojson MusicToJson(const lfs_music_result &r) {
  return {{"score", r.score},
          {"is_music", r.is_music != 0},
          {"low_confidence", r.low_confidence != 0},
          {"windows", r.windows},
          {"music_windows", r.music_windows}};
}

// ---- commands

struct ChunkArgs {
  std::vector<std::string> inputs;
  std::string out;
  bool write_chunks = false;
  std::string audit_words;
  double audit_fixed = 30.0;
};

int CmdChunk(const PipelineConfig &c, const ChunkArgs &a, int jobs) {
  const auto files = ExpandInputs(a.inputs, {".wav"});
  if (a.write_chunks && a.out.empty()) throw ConfigError("--write-chunks needs --out");
  if (!(a.audit_fixed > 0.0)) throw ConfigError("--audit-fixed must be > 0");
  std::string words;
  if (!a.audit_words.empty()) {
    try {
      words = ReadText(a.audit_words);
    } catch (const CallError &e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitInput;
    }
  }
  if (!a.out.empty()) EnsureDir(a.out);
  const ojson config = ConfigToJson(c);

  auto results = RunPool<FileResult>(files.size(), jobs, [&](size_t i) {
    const std::string &path = files[i];
    return Protect(path, [&]() -> ojson {
      Waveform w;
      LoadAudio(path, c, &w);
      const double duration = lfs_waveform_duration(w.p);
      lfs_span *spans = nullptr;
      size_t n = 0;
      Check(lfs_split_on_silence(w.p, &c.silence, &spans, &n), path);
      std::unique_ptr<lfs_span, void (*)(lfs_span *)> hold(spans, lfs_spans_free);
      ChunkPlan plan;
      Check(lfs_chunk_plan_create(spans, n, duration, &c.chunking, &plan.p), path);
      const std::string id = Stem(path);
      CString plan_json;
      Check(lfs_chunk_plan_to_json(plan.p, id.c_str(), &c.chunking, &plan_json.p), path);

      ojson entry;
      entry["path"] = path;
      entry["sample_rate"] = lfs_waveform_sample_rate(w.p);
      entry["nonsilent"] = SpansToJson(spans, n);
      entry["plan"] = ojson::parse(plan_json.str());
      if (c.detect_music) {
        lfs_music_result r;
        Check(lfs_detect_music(w.p, &c.music, &r), path);
        entry["music"] = MusicToJson(r);
      }
      if (!a.audit_words.empty()) {
        ChunkPlan fixed;
        Check(lfs_chunk_plan_fixed(duration, a.audit_fixed, &fixed.p), path);
        CString s, f;
        Check(lfs_chunk_plan_audit_json(plan.p, words.c_str(), id.c_str(), &s.p),
              a.audit_words);
        Check(lfs_chunk_plan_audit_json(fixed.p, words.c_str(), id.c_str(), &f.p),
              a.audit_words);
        entry["audit"] = {{"silence_aware", ojson::parse(s.str())},
                          {"fixed", ojson::parse(f.str())},
                          {"fixed_seconds", a.audit_fixed}};
      }
      if (a.out.empty()) return entry;

      const std::string plan_path = (fs::path(a.out) / (id + ".chunks.json")).string();
      ojson doc = entry;
      doc["config"] = config;
      WriteText(plan_path, Dump(doc));
      ojson summary = {{"path", path},
                       {"recording_id", id},
                       {"chunks", lfs_chunk_plan_count(plan.p)},
                       {"forced_split_count", lfs_chunk_plan_forced_splits(plan.p)},
                       {"plan", plan_path}};
      if (a.write_chunks) {
        const fs::path dir = fs::path(a.out) / id;
        EnsureDir(dir.string());
        ojson wavs = ojson::array();
        for (size_t k = 0; k < lfs_chunk_plan_count(plan.p); ++k) {
          Waveform piece;
          Check(lfs_chunk_plan_extract(plan.p, w.p, k, &piece.p), path);
          char name[32];
          std::snprintf(name, sizeof(name), "chunk_%04zu.wav", k);
          const std::string wav = (dir / name).string();
          Check(lfs_waveform_write(piece.p, wav.c_str(), 1), wav);
          wavs.push_back(wav);
        }
        summary["chunk_wavs"] = wavs;
      }
      if (entry.contains("music")) summary["music"] = entry["music"];
      if (entry.contains("audit")) summary["audit"] = entry["audit"];
      return summary;
    });
  });

  ojson doc;
  doc["command"] = "chunk";
  doc["config"] = config;
  doc["files"] = ojson::array();
  for (const auto &r : results) doc["files"].push_back(r.entry);
  std::cout << Dump(doc);
  return Finish(results);
}

struct MusicArgs {
  std::vector<std::string> inputs;
  std::string out;
};

int CmdDetectMusic(const PipelineConfig &c, const MusicArgs &a, int jobs) {
  const auto files = ExpandInputs(a.inputs, {".wav"});
  auto results = RunPool<FileResult>(files.size(), jobs, [&](size_t i) {
    const std::string &path = files[i];
    return Protect(path, [&]() -> ojson {
      Waveform w;
      LoadAudio(path, c, &w);
      lfs_music_result r;
      Check(lfs_detect_music(w.p, &c.music, &r), path);
      ojson entry = {{"path", path}};
      entry.update(MusicToJson(r));
      return entry;
    });
  });
  ojson doc;
  doc["command"] = "detect-music";
  doc["config"] = ConfigToJson(c);
  doc["files"] = ojson::array();
  for (const auto &r : results) doc["files"].push_back(r.entry);
  Emit(a.out, Dump(doc));
  return Finish(results);
}

struct DiarizeArgs {
  std::vector<std::string> inputs;
  std::string out;
  std::string format = "csv";
};

size_t DistinctSpeakers(const lfs_timeline_set *t) {
  std::set<std::string> names;
  for (size_t r = 0; r < lfs_timeline_set_count(t); ++r) {
    for (size_t s = 0; s < lfs_timeline_set_segment_count(t, r); ++s) {
      const char *speaker = nullptr;
      Check(lfs_timeline_set_segment(t, r, s, nullptr, &speaker));
      names.insert(speaker);
    }
  }
  return names.size();
}

size_t SegmentTotal(const lfs_timeline_set *t) {
  size_t n = 0;
  for (size_t r = 0; r < lfs_timeline_set_count(t); ++r) {
    n += lfs_timeline_set_segment_count(t, r);
  }
  return n;
}

int CmdDiarize(const PipelineConfig &c, const DiarizeArgs &a, int jobs) {
  if (a.format != "csv" && a.format != "rttm") {
    throw ConfigError("--format must be csv or rttm");
  }
  const auto files = ExpandInputs(a.inputs, {".emb"});
  if (!a.out.empty()) EnsureDir(a.out);
  lfs_diarize_options opts = lfs_diarize_options_default();
  opts.clustering = c.clustering;
  opts.min_duration_off = c.min_duration_off;
  const ojson config = ConfigToJson(c);

  std::vector<std::string> texts(files.size());
  auto results = RunPool<FileResult>(files.size(), jobs, [&](size_t i) {
    const std::string &path = files[i];
    return Protect(path, [&]() -> ojson {
      Embeddings e;
      Check(lfs_embedding_set_read(path.c_str(), &e.p), path);
      Timelines t;
      CString clusters;
      Check(lfs_diarize(e.p, &opts, &t.p, &clusters.p), path);
      CString csv, rttm;
      Check(lfs_timeline_set_to_text(t.p, LFS_FORMAT_CSV, &csv.p), path);
      Check(lfs_timeline_set_to_text(t.p, LFS_FORMAT_RTTM, &rttm.p), path);
      ojson entry = {{"path", path},
                     {"recording_id", lfs_embedding_set_recording_id(e.p)},
                     {"windows", lfs_embedding_set_count(e.p)},
                     {"speakers", DistinctSpeakers(t.p)},
                     {"segments", SegmentTotal(t.p)}};
      if (a.out.empty()) {
        texts[i] = a.format == "csv" ? csv.str() : rttm.str();
        return entry;
      }
      const std::string stem = (fs::path(a.out) / Stem(path)).string();
      ojson cluster_doc = ojson::parse(clusters.str());
      cluster_doc["config"] = config;
      WriteText(stem + ".csv", csv.str());
      WriteText(stem + ".rttm", rttm.str());
      WriteText(stem + ".clusters.json", Dump(cluster_doc));
      entry["outputs"] = {stem + ".csv", stem + ".rttm", stem + ".clusters.json"};
      return entry;
    });
  });

  if (a.out.empty()) {
    // One combined document; the CSV header appears once.
    std::string combined = a.format == "csv" ? "id,start,end,speaker\n" : "";
    for (const auto &t : texts) {
      if (a.format == "csv" && !t.empty()) {
        combined += t.substr(t.find('\n') + 1);
      } else {
        combined += t;
      }
    }
    std::cout << combined;
  } else {
    ojson doc;
    doc["command"] = "diarize";
    doc["config"] = config;
    doc["files"] = ojson::array();
    for (const auto &r : results) doc["files"].push_back(r.entry);
    std::cout << Dump(doc);
  }
  return Finish(results);
}

struct ClusterArgs {
  std::vector<std::string> inputs;
  std::string out;
};

int CmdCluster(const PipelineConfig &c, const ClusterArgs &a, int jobs) {
  const auto files = ExpandInputs(a.inputs, {".emb"});
  auto results = RunPool<FileResult>(files.size(), jobs, [&](size_t i) {
    const std::string &path = files[i];
    return Protect(path, [&]() -> ojson {
      Embeddings e;
      Check(lfs_embedding_set_read(path.c_str(), &e.p), path);
      CString json;
      Check(lfs_cluster_json(e.p, &c.clustering, &json.p), path);
      ojson entry = {{"path", path}};
      entry.update(ojson::parse(json.str()));
      return entry;
    });
  });
  ojson doc;
  doc["command"] = "cluster";
  doc["config"] = ConfigToJson(c);
  doc["files"] = ojson::array();
  for (const auto &r : results) doc["files"].push_back(r.entry);
  Emit(a.out, Dump(doc));
  return Finish(results);
}

lfs_timeline_format FormatFor(const std::string &path) {
  const std::string ext = Lower(fs::path(path).extension().string());
  if (ext == ".rttm") return LFS_FORMAT_RTTM;
  if (ext == ".csv") return LFS_FORMAT_CSV;
  throw CallError(LFS_ERR_FORMAT, path + ": expected a .rttm or .csv file");
}

// All recordings from the given files; equal ids are fused.
void LoadTimelines(const std::vector<std::string> &paths, bool strict, Timelines *out) {
  Check(lfs_timeline_set_create(&out->p));
  for (const auto &path : ExpandInputs(paths, {".rttm", ".csv"})) {
    const std::string text = ReadText(path);
    Timelines t;
    Check(lfs_timeline_set_parse(text.c_str(), FormatFor(path), strict ? 1 : 0, &t.p), path);
    Check(lfs_timeline_set_append(out->p, t.p), path);
  }
}

struct WindowsArgs {
  std::vector<std::string> inputs;
  std::string out;
};

ojson WindowsToJson(const std::vector<lfs_span> &speech, double window, double hop) {
  lfs_window *w = nullptr;
  size_t n = 0;
  Check(lfs_window_schedule(speech.data(), speech.size(), window, hop, &w, &n));
  std::unique_ptr<lfs_window, void (*)(lfs_window *)> hold(w, lfs_windows_free);
  ojson a = ojson::array();
  for (size_t i = 0; i < n; ++i) {
    a.push_back({{"start", w[i].span.start},
                 {"end", w[i].span.end},
                 {"short", w[i].short_window != 0}});
  }
  return a;
}

// Union of all speaker segments of one recording.
std::vector<lfs_span> SpeechRegions(const lfs_timeline_set *t, size_t r) {
  std::vector<lfs_span> segs;
  for (size_t s = 0; s < lfs_timeline_set_segment_count(t, r); ++s) {
    lfs_span span;
    Check(lfs_timeline_set_segment(t, r, s, &span, nullptr));
    segs.push_back(span);
  }
  std::sort(segs.begin(), segs.end(),
            [](const lfs_span &x, const lfs_span &y) { return x.start < y.start; });
  std::vector<lfs_span> merged;
  for (const auto &s : segs) {
    if (!merged.empty() && s.start <= merged.back().end) {
      merged.back().end = std::max(merged.back().end, s.end);
    } else {
      merged.push_back(s);
    }
  }
  return merged;
}

int CmdWindows(const PipelineConfig &c, const WindowsArgs &a, int jobs) {
  const auto files = ExpandInputs(a.inputs, {".wav", ".rttm", ".csv"});
  auto results = RunPool<FileResult>(files.size(), jobs, [&](size_t i) {
    const std::string &path = files[i];
    return Protect(path, [&]() -> ojson {
      ojson entry = {{"path", path}, {"recordings", ojson::array()}};
      const std::string ext = Lower(fs::path(path).extension().string());
      if (ext == ".wav") {
        Waveform w;
        LoadAudio(path, c, &w);
        lfs_span *spans = nullptr;
        size_t n = 0;
        Check(lfs_split_on_silence(w.p, &c.silence, &spans, &n), path);
        std::vector<lfs_span> speech(spans, spans + n);
        lfs_spans_free(spans);
        entry["recordings"].push_back(
            {{"id", Stem(path)}, {"windows", WindowsToJson(speech, c.window, c.hop)}});
        return entry;
      }
      Timelines t;
      LoadTimelines({path}, true, &t);
      for (size_t r = 0; r < lfs_timeline_set_count(t.p); ++r) {
        entry["recordings"].push_back(
            {{"id", lfs_timeline_set_recording_id(t.p, r)},
             {"windows", WindowsToJson(SpeechRegions(t.p, r), c.window, c.hop)}});
      }
      return entry;
    });
  });
  ojson doc;
  doc["command"] = "windows";
  doc["config"] = ConfigToJson(c);
  doc["files"] = ojson::array();
  for (const auto &r : results) doc["files"].push_back(r.entry);
  Emit(a.out, Dump(doc));
  return Finish(results);
}

struct ScoreArgs {
  std::vector<std::string> ref;
  std::vector<std::string> hyp;
  std::string out;
  bool lenient = false;
};

int Report(const CallError &e) {
  std::cerr << "error: " << e.what() << "\n";
  return ExitCodeFor(e.status);
}

int CmdScoreDer(const PipelineConfig &c, const ScoreArgs &a) {
  try {
    Timelines ref, hyp;
    LoadTimelines(a.ref, !a.lenient, &ref);
    LoadTimelines(a.hyp, !a.lenient, &hyp);
    CString json;
    Check(lfs_score_der(ref.p, hyp.p, &c.der, &json.p));
    ojson doc = ojson::parse(json.str());
    doc["config"] = ConfigToJson(c);
    Emit(a.out, Dump(doc));
  } catch (const CallError &e) {
    return Report(e);
  }
  return kExitOk;
}

// Concatenated transcripts; each file is validated alone first so errors
// carry its own line numbers.
std::string LoadTranscripts(const std::vector<std::string> &paths) {
  std::string all;
  for (const auto &path : ExpandInputs(paths, {".jsonl"})) {
    std::string text = ReadText(path);
    CString probe;
    Check(lfs_score_wer(text.c_str(), "", 0, &probe.p), path);
    if (!text.empty() && text.back() != '\n') text += '\n';
    all += text;
  }
  return all;
}

int CmdScoreWer(const PipelineConfig &c, const ScoreArgs &a) {
  try {
    const std::string ref = LoadTranscripts(a.ref);
    const std::string hyp = LoadTranscripts(a.hyp);
    CString json;
    Check(lfs_score_wer(ref.c_str(), hyp.c_str(), c.strip_punctuation ? 1 : 0, &json.p));
    ojson doc = ojson::parse(json.str());
    doc["config"] = ConfigToJson(c);
    Emit(a.out, Dump(doc));
  } catch (const CallError &e) {
    return Report(e);
  }
  return kExitOk;
}

struct RepairArgs {
  std::string input;
  std::string out;
  std::string report;
  bool strict = false;
};

int CmdRepair(const RepairArgs &a) {
  try {
    const std::string text = ReadText(a.input);
    CString repaired, report;
    const lfs_status s = lfs_repair_csv(text.c_str(), a.strict ? 1 : 0, &repaired.p, &report.p);
    if (s != LFS_OK) {
      const std::string first = lfs_last_error();
      if (!a.strict) throw CallError(s, a.input + ": " + first);
      // List every offending row, not just the first.
      CString scan_csv, scan_report;
      std::vector<int> rows;
      if (lfs_repair_csv(text.c_str(), 0, &scan_csv.p, &scan_report.p) == LFS_OK) {
        const ojson r = ojson::parse(scan_report.str());
        for (int n : r["repaired_lines"]) rows.push_back(n);
        for (int n : r["dropped_lines"]) rows.push_back(n);
        std::sort(rows.begin(), rows.end());
      }
      std::cerr << "error: " << a.input << ": " << first << "\n";
      if (!rows.empty()) {
        std::cerr << "error: " << a.input << ": malformed rows:";
        for (int n : rows) std::cerr << " " << n;
        std::cerr << "\n";
      }
      return ExitCodeFor(s);
    }
    if (a.out.empty()) {
      std::cout << repaired.str();
      std::cout.flush();
      if (a.report.empty()) {
        std::cerr << report.str();
      } else {
        WriteText(a.report, report.str());
      }
    } else {
      WriteText(a.out, repaired.str());
      Emit(a.report, report.str());
    }
  } catch (const CallError &e) {
    return Report(e);
  }
  return kExitOk;
}

int CmdDecodeConfig(const std::string &path, const std::string &out) {
  try {
    const std::string text = ReadText(path);
    CString norm;
    Check(lfs_decode_config_normalize(text.c_str(), &norm.p), path);
    Emit(out, norm.str());
  } catch (const CallError &e) {
    return Report(e);
  }
  return kExitOk;
}

int Run(int argc, char **argv) {
  CLI::App app{"Long-form speech pipeline tools"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(lfs_version()));
  std::string config_path;
  int jobs_flag = 0;
  app.add_option("--config", config_path, "JSON pipeline configuration");
  app.add_option("-j,--jobs", jobs_flag, "worker threads (default: $LFSPEECH_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);

  // Flag overrides are collected as optionals and applied over the file.
  std::optional<double> min_dur, max_dur, top_db, highpass, peak;
  std::optional<double> music_threshold, flux_threshold, peak_rate, tau, mdo, collar;
  std::optional<double> window, hop;
  std::optional<int> min_cluster_size, pca, num_clusters, k_min, k_max, smoothing;
  std::optional<uint64_t> seed;
  std::optional<std::string> method, criterion;
  bool detect_music = false, skip_overlap = false, strip_punct = false;

  ChunkArgs chunk;
  auto *c_chunk = app.add_subcommand("chunk", "silence-aware chunk plans for WAV files");
  c_chunk->add_option("inputs", chunk.inputs, "WAV files or directories")->required();
  c_chunk->add_option("-o,--out", chunk.out, "directory for per-file plans");
  c_chunk->add_flag("--write-chunks", chunk.write_chunks, "also write float32 chunk WAVs");
  c_chunk->add_option("--audit-words", chunk.audit_words,
                      "word timings (transcript JSONL, one word per line) to audit boundaries");
  c_chunk->add_option("--audit-fixed", chunk.audit_fixed, "fixed chunk length for the audit baseline");
  c_chunk->add_option("--min-dur", min_dur);
  c_chunk->add_option("--max-dur", max_dur);
  c_chunk->add_option("--top-db", top_db);
  c_chunk->add_option("--highpass", highpass, "high-pass cutoff in Hz, 0 disables");
  c_chunk->add_option("--peak", peak, "peak normalization target, 0 disables");
  c_chunk->add_flag("--detect-music", detect_music, "add music presence to each plan");

  MusicArgs music;
  auto *c_music = app.add_subcommand("detect-music", "spectral-flux music presence");
  c_music->add_option("inputs", music.inputs, "WAV files or directories")->required();
  c_music->add_option("-o,--out", music.out, "write the report here instead of stdout");
  c_music->add_option("--threshold", music_threshold, "fraction of music windows needed");
  c_music->add_option("--flux-threshold", flux_threshold);
  c_music->add_option("--peak-rate", peak_rate, "onset peaks per second");

  auto add_cluster_flags = [&](CLI::App *sub) {
    sub->add_option("--method", method, "ahc, kmeans, gmm or overcluster");
    sub->add_option("--tau", tau);
    sub->add_option("--min-cluster-size", min_cluster_size);
    sub->add_option("--pca", pca, "PCA components for kmeans/gmm, 0 disables");
    sub->add_option("--num-clusters", num_clusters, "0 estimates the count");
    sub->add_option("--k-min", k_min);
    sub->add_option("--k-max", k_max);
    sub->add_option("--criterion", criterion, "aic or bic");
    sub->add_option("--smoothing", smoothing, "odd label smoothing window");
    sub->add_option("--seed", seed);
  };

  DiarizeArgs diarize;
  auto *c_diarize = app.add_subcommand("diarize", "speaker turns from window embeddings");
  c_diarize->add_option("inputs", diarize.inputs, "embedding containers or directories")->required();
  c_diarize->add_option("-o,--out", diarize.out, "directory for CSV, RTTM and cluster files");
  c_diarize->add_option("--format", diarize.format, "stdout format without --out: csv or rttm");
  c_diarize->add_option("--min-duration-off", mdo);
  add_cluster_flags(c_diarize);

  ClusterArgs cluster;
  auto *c_cluster = app.add_subcommand("cluster", "cluster window embeddings");
  c_cluster->add_option("inputs", cluster.inputs, "embedding containers or directories")->required();
  c_cluster->add_option("-o,--out", cluster.out, "write the report here instead of stdout");
  add_cluster_flags(c_cluster);

  WindowsArgs windows;
  auto *c_windows = app.add_subcommand("windows", "sliding embedding windows over speech");
  c_windows->add_option("inputs", windows.inputs, "WAV, RTTM or CSV files")->required();
  c_windows->add_option("-o,--out", windows.out, "write the report here instead of stdout");
  c_windows->add_option("--window", window);
  c_windows->add_option("--hop", hop);
  c_windows->add_option("--top-db", top_db);

  ScoreArgs score;
  auto *c_score = app.add_subcommand("score", "WER and DER scoring");
  c_score->require_subcommand(1);
  auto *c_wer = c_score->add_subcommand("wer", "word error rate over transcript JSONL");
  auto *c_der = c_score->add_subcommand("der", "diarization error rate over RTTM/CSV");
  for (auto *sub : {c_wer, c_der}) {
    sub->add_option("--ref", score.ref, "reference files or directories")->required();
    sub->add_option("--hyp", score.hyp, "hypothesis files or directories")->required();
    sub->add_option("-o,--out", score.out, "write the report here instead of stdout");
  }
  c_wer->add_flag("--strip-punct", strip_punct, "treat punctuation as whitespace");
  c_der->add_option("--collar", collar);
  c_der->add_flag("--skip-overlap", skip_overlap);
  c_der->add_flag("--lenient", score.lenient, "repair malformed CSV rows instead of failing");

  RepairArgs repair;
  auto *c_repair = app.add_subcommand("repair", "repair a segments CSV");
  c_repair->add_option("input", repair.input, "segments CSV")->required();
  c_repair->add_flag("--strict", repair.strict, "fail on any malformed row");
  c_repair->add_option("-o,--out", repair.out, "repaired CSV (default stdout)");
  c_repair->add_option("--report", repair.report, "repair report JSON");

  std::string decode_input, decode_out;
  auto *c_decode = app.add_subcommand("decode-config", "validate an ASR decoding config");
  c_decode->add_option("input", decode_input, "decode config JSON")->required();
  c_decode->add_option("-o,--out", decode_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    PipelineConfig c = LoadConfig(config_path);
    if (min_dur) c.chunking.min_dur = *min_dur;
    if (max_dur) c.chunking.max_dur = *max_dur;
    if (top_db) c.silence.top_db = *top_db;
    if (highpass) c.preprocess.highpass_hz = *highpass;
    if (peak) c.preprocess.peak_target = *peak;
    if (detect_music) c.detect_music = true;
    if (music_threshold) c.music.decision_threshold = *music_threshold;
    if (flux_threshold) c.music.flux_threshold = *flux_threshold;
    if (peak_rate) c.music.peak_rate_threshold = *peak_rate;
    if (method) c.clustering.method = ParseMethod(*method);
    if (tau) c.clustering.tau = *tau;
    if (min_cluster_size) c.clustering.min_cluster_size = *min_cluster_size;
    if (pca) c.clustering.pca_components = *pca;
    if (num_clusters) c.clustering.num_clusters = *num_clusters;
    if (k_min) c.clustering.k_min = *k_min;
    if (k_max) c.clustering.k_max = *k_max;
    if (criterion) c.clustering.criterion = ParseCriterion(*criterion);
    if (smoothing) c.clustering.smoothing_window = *smoothing;
    if (seed) c.clustering.seed = *seed;
    if (mdo) c.min_duration_off = *mdo;
    if (window) c.window = *window;
    if (hop) c.hop = *hop;
    if (collar) c.der.collar = *collar;
    if (skip_overlap) c.der.skip_overlap = 1;
    if (strip_punct) c.strip_punctuation = true;
    Preflight(c);
    const int jobs = Workers(jobs_flag);

    if (*c_chunk) return CmdChunk(c, chunk, jobs);
    if (*c_music) return CmdDetectMusic(c, music, jobs);
    if (*c_diarize) return CmdDiarize(c, diarize, jobs);
    if (*c_cluster) return CmdCluster(c, cluster, jobs);
    if (*c_windows) return CmdWindows(c, windows, jobs);
    if (*c_wer) return CmdScoreWer(c, score);
    if (*c_der) return CmdScoreDer(c, score);
    if (*c_repair) return CmdRepair(repair);
    if (*c_decode) return CmdDecodeConfig(decode_input, decode_out);
  } catch (const ConfigError &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const CallError &e) {
    return Report(e);
  }
  return kExitConfig;
}

}  // namespace

int main(int argc, char **argv) {
  try {
    return Run(argc, argv);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
