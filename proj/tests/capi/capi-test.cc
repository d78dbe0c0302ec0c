// tests/capi/capi-test.cc

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "lfspeech/lfspeech.h"

namespace {

// Owns a malloc'd string handed out by the library.
struct Text {
  char *p = nullptr;
  ~Text() { lfs_string_free(p); }
  std::string str() const { return p ? p : ""; }
  nlohmann::json json() const { return nlohmann::json::parse(str()); }
};

std::vector<float> Tone(double hz, int rate, double seconds, double amp) {
  std::vector<float> v(static_cast<std::size_t>(seconds * rate));
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = static_cast<float>(amp * std::sin(2 * M_PI * hz * i / rate));
  }
  return v;
}

std::filesystem::path TempDir() {
  auto dir = std::filesystem::temp_directory_path() / "lfs-capi-test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("status names and last error") {
  CHECK(std::string(lfs_status_name(LFS_OK)) == "ok");
  CHECK(std::strlen(lfs_version()) > 0);
  lfs_waveform *w = nullptr;
  CHECK(lfs_waveform_create(nullptr, 10, 16000, &w) == LFS_ERR_PARAMETER);
  CHECK(w == nullptr);
  CHECK(std::strlen(lfs_last_error()) > 0);
  const float one = 0.5f;
  CHECK(lfs_waveform_create(&one, 1, 0, &w) == LFS_ERR_PARAMETER);
  CHECK(lfs_waveform_read("/nonexistent/file.wav", &w) == LFS_ERR_IO);
  lfs_waveform_free(nullptr);
  lfs_string_free(nullptr);
}

TEST_CASE("waveform pipeline") {
  // 1 s tone, 1 s silence, 1 s tone at 32 kHz.
  std::vector<float> x = Tone(440, 32000, 1.0, 0.4);
  x.resize(64000, 0.0f);
  const auto tail = Tone(440, 32000, 1.0, 0.4);
  x.insert(x.end(), tail.begin(), tail.end());

  lfs_waveform *raw = nullptr;
  REQUIRE(lfs_waveform_create(x.data(), x.size(), 32000, &raw) == LFS_OK);
  CHECK(lfs_waveform_length(raw) == x.size());
  CHECK(lfs_waveform_duration(raw) == doctest::Approx(3.0));

  const lfs_preprocess_options popt = lfs_preprocess_options_default();
  CHECK(popt.target_rate == 16000);
  lfs_waveform *w = nullptr;
  REQUIRE(lfs_waveform_preprocess(raw, &popt, &w) == LFS_OK);
  CHECK(lfs_waveform_sample_rate(w) == 16000);
  CHECK(lfs_waveform_duration(w) == doctest::Approx(3.0).epsilon(1e-3));
  float peak = 0;
  for (std::size_t i = 0; i < lfs_waveform_length(w); ++i) {
    peak = std::max(peak, std::fabs(lfs_waveform_samples(w)[i]));
  }
  CHECK(peak == doctest::Approx(0.98).epsilon(1e-4));

  lfs_span *spans = nullptr;
  size_t n = 0;
  REQUIRE(lfs_split_on_silence(w, nullptr, &spans, &n) == LFS_OK);
  REQUIRE(n == 2);
  CHECK(spans[0].start == doctest::Approx(0.0).epsilon(0.05));
  CHECK(spans[1].end == doctest::Approx(3.0).epsilon(0.05));
  CHECK(std::fabs(spans[0].end - 1.0) < 0.1);
  CHECK(std::fabs(spans[1].start - 2.0) < 0.1);

  lfs_music_result music{};
  REQUIRE(lfs_detect_music(w, nullptr, &music) == LFS_OK);
  CHECK(music.low_confidence == 0);
  lfs_music_options mopt = lfs_music_options_default();
  mopt.decision_threshold = 2.0;
  CHECK(lfs_detect_music(w, &mopt, &music) == LFS_ERR_PARAMETER);

  const auto path = (TempDir() / "pipeline.wav").string();
  REQUIRE(lfs_waveform_write(w, path.c_str(), 1) == LFS_OK);
  lfs_waveform *back = nullptr;
  REQUIRE(lfs_waveform_read(path.c_str(), &back) == LFS_OK);
  REQUIRE(lfs_waveform_length(back) == lfs_waveform_length(w));
  CHECK(std::memcmp(lfs_waveform_samples(back), lfs_waveform_samples(w),
                    lfs_waveform_length(w) * sizeof(float)) == 0);

  lfs_spans_free(spans);
  lfs_waveform_free(back);
  lfs_waveform_free(w);
  lfs_waveform_free(raw);
}

TEST_CASE("chunk plans") {
  const lfs_span speech[] = {{0, 70}};
  lfs_chunk_plan *plan = nullptr;
  REQUIRE(lfs_chunk_plan_create(speech, 1, 70, nullptr, &plan) == LFS_OK);
  REQUIRE(lfs_chunk_plan_count(plan) == 3);
  CHECK(lfs_chunk_plan_forced_splits(plan) == 2);
  lfs_span s{};
  const char *kind = nullptr;
  REQUIRE(lfs_chunk_plan_get(plan, 2, &s, &kind) == LFS_OK);
  CHECK(s.start == 60.0);
  CHECK(s.end == 70.0);
  CHECK(std::string(kind) == "end-of-audio");
  CHECK(lfs_chunk_plan_get(plan, 3, &s, &kind) == LFS_ERR_PARAMETER);

  Text json;
  REQUIRE(lfs_chunk_plan_to_json(plan, "rec", nullptr, &json.p) == LFS_OK);
  CHECK(json.json()["chunks"][0]["kind"] == "forced");

  std::vector<float> samples(70 * 16000, 0.1f);
  lfs_waveform *w = nullptr;
  REQUIRE(lfs_waveform_create(samples.data(), samples.size(), 16000, &w) == LFS_OK);
  lfs_waveform *piece = nullptr;
  REQUIRE(lfs_chunk_plan_extract(plan, w, 1, &piece) == LFS_OK);
  CHECK(lfs_waveform_length(piece) == 30u * 16000);

  Text audit;
  REQUIRE(lfs_chunk_plan_audit_json(
              plan, "{\"id\":\"rec\",\"start\":29.5,\"end\":30.5,\"text\":\"w\"}\n", "rec",
              &audit.p) == LFS_OK);
  CHECK(audit.json()["total_straddles"] == 1);

  const lfs_span overlapping[] = {{0, 5}, {4, 8}};
  lfs_chunk_plan *bad = nullptr;
  CHECK(lfs_chunk_plan_create(overlapping, 2, 8, nullptr, &bad) == LFS_ERR_STRUCTURAL);
  lfs_chunk_options opt = lfs_chunk_options_default();
  opt.min_dur = 40;
  CHECK(lfs_chunk_plan_create(speech, 1, 70, &opt, &bad) == LFS_ERR_PARAMETER);

  lfs_chunk_plan *fixed = nullptr;
  REQUIRE(lfs_chunk_plan_fixed(70, 30, &fixed) == LFS_OK);
  CHECK(lfs_chunk_plan_count(fixed) == 3);

  lfs_chunk_plan_free(fixed);
  lfs_waveform_free(piece);
  lfs_waveform_free(w);
  lfs_chunk_plan_free(plan);
}

TEST_CASE("timelines, repair and DER") {
  const char *ref_text = "SPEAKER rec 1 0.000 10.000 <NA> <NA> A <NA> <NA>\n";
  const char *hyp_text = "SPEAKER rec 1 0.000 8.000 <NA> <NA> X <NA> <NA>\n";
  lfs_timeline_set *ref = nullptr, *hyp = nullptr;
  REQUIRE(lfs_timeline_set_parse(ref_text, LFS_FORMAT_RTTM, 1, &ref) == LFS_OK);
  REQUIRE(lfs_timeline_set_parse(hyp_text, LFS_FORMAT_RTTM, 1, &hyp) == LFS_OK);
  REQUIRE(lfs_timeline_set_count(ref) == 1);
  CHECK(std::string(lfs_timeline_set_recording_id(ref, 0)) == "rec");
  CHECK(lfs_timeline_set_segment_count(ref, 0) == 1);
  lfs_span s{};
  const char *speaker = nullptr;
  REQUIRE(lfs_timeline_set_segment(hyp, 0, 0, &s, &speaker) == LFS_OK);
  CHECK(s.end == 8.0);
  CHECK(std::string(speaker) == "X");

  Text rttm;
  REQUIRE(lfs_timeline_set_to_text(ref, LFS_FORMAT_RTTM, &rttm.p) == LFS_OK);
  CHECK(rttm.str() == ref_text);
  Text csv;
  REQUIRE(lfs_timeline_set_to_text(ref, LFS_FORMAT_CSV, &csv.p) == LFS_OK);
  CHECK(csv.str() == "id,start,end,speaker\nrec,0.000,10.000,A\n");

  Text der;
  REQUIRE(lfs_score_der(ref, hyp, nullptr, &der.p) == LFS_OK);
  CHECK(der.json()["corpus"]["micro_der"].get<double>() == doctest::Approx(0.2));
  lfs_der_options dopt = lfs_der_options_default();
  dopt.collar = -1;
  Text bad_der;
  CHECK(lfs_score_der(ref, hyp, &dopt, &bad_der.p) == LFS_ERR_PARAMETER);

  lfs_timeline_set *broken = nullptr;
  CHECK(lfs_timeline_set_parse("SPEAKER rec 1 zero 1 <NA> <NA> A <NA> <NA>\n",
                               LFS_FORMAT_RTTM, 1, &broken) == LFS_ERR_FORMAT);

  Text repaired, report;
  REQUIRE(lfs_repair_csv("id,start,end,speaker\n rec1 ,2.0,1.0,A\n", 0, &repaired.p,
                         &report.p) == LFS_OK);
  CHECK(repaired.str() == "id,start,end,speaker\nrec1,1.0,2.0,A\n");
  CHECK(report.json()["repaired"] == 1);
  Text strict_out;
  CHECK(lfs_repair_csv("id,start,end,speaker\nrec1,2.0,1.0,A\n", 1, &strict_out.p,
                       nullptr) == LFS_ERR_FORMAT);

  lfs_timeline_set *all = nullptr;
  REQUIRE(lfs_timeline_set_create(&all) == LFS_OK);
  REQUIRE(lfs_timeline_set_append(all, ref) == LFS_OK);
  CHECK(lfs_timeline_set_count(all) == 1);

  lfs_timeline_set_free(all);
  lfs_timeline_set_free(hyp);
  lfs_timeline_set_free(ref);
}

TEST_CASE("embeddings and diarization") {
  // Two speakers, 20 windows each, alternating in blocks of 10.
  const uint32_t dim = 8;
  std::vector<float> data;
  std::vector<lfs_span> spans;
  for (int i = 0; i < 40; ++i) {
    const int who = (i / 10) % 2;
    for (uint32_t j = 0; j < dim; ++j) {
      const float base = (j == static_cast<uint32_t>(who)) ? 1.0f : 0.0f;
      data.push_back(base + 0.01f * static_cast<float>((i * 7 + j * 3) % 5));
    }
    spans.push_back({i * 0.75, i * 0.75 + 1.5});
  }
  lfs_embedding_set *set = nullptr;
  REQUIRE(lfs_embedding_set_create("rec", data.data(), 40, dim, spans.data(), &set) ==
          LFS_OK);
  CHECK(lfs_embedding_set_count(set) == 40);
  CHECK(lfs_embedding_set_dim(set) == dim);

  const auto path = (TempDir() / "set.emb").string();
  REQUIRE(lfs_embedding_set_write(set, path.c_str()) == LFS_OK);
  lfs_embedding_set *back = nullptr;
  REQUIRE(lfs_embedding_set_read(path.c_str(), &back) == LFS_OK);
  CHECK(std::string(lfs_embedding_set_recording_id(back)) == "rec");

  std::FILE *f = std::fopen(path.c_str(), "wb");
  std::fputs("garbage", f);
  std::fclose(f);
  lfs_embedding_set *junk = nullptr;
  CHECK(lfs_embedding_set_read(path.c_str(), &junk) == LFS_ERR_FORMAT);
  CHECK(std::string(lfs_last_error()).find("offset") != std::string::npos);

  lfs_cluster_options copt = lfs_cluster_options_default();
  copt.min_cluster_size = 5;
  Text clusters;
  REQUIRE(lfs_cluster_json(back, &copt, &clusters.p) == LFS_OK);
  CHECK(clusters.json()["result"]["k"] == 2);

  lfs_cluster_method m;
  REQUIRE(lfs_cluster_method_parse("gmm", &m) == LFS_OK);
  CHECK(m == LFS_CLUSTER_GMM);
  CHECK(lfs_cluster_method_parse("spectral", &m) == LFS_ERR_PARAMETER);

  lfs_diarize_options dopt = lfs_diarize_options_default();
  dopt.clustering.min_cluster_size = 5;
  lfs_timeline_set *tl = nullptr;
  Text info;
  REQUIRE(lfs_diarize(back, &dopt, &tl, &info.p) == LFS_OK);
  REQUIRE(lfs_timeline_set_count(tl) == 1);
  CHECK(lfs_timeline_set_segment_count(tl, 0) == 4);
  CHECK(info.json()["result"]["k"] == 2);

  lfs_window *windows = nullptr;
  size_t count = 0;
  const lfs_span speech[] = {{0, 3}, {5, 6}};
  REQUIRE(lfs_window_schedule(speech, 2, 1.5, 0.75, &windows, &count) == LFS_OK);
  REQUIRE(count == 4);
  CHECK(windows[3].short_window == 1);
  lfs_windows_free(windows);

  lfs_timeline_set_free(tl);
  lfs_embedding_set_free(back);
  lfs_embedding_set_free(set);
  std::filesystem::remove_all(TempDir());
}

TEST_CASE("WER and decode config") {
  Text wer;
  REQUIRE(lfs_score_wer("{\"id\":\"a\",\"start\":0,\"end\":1,\"text\":\"x y z\"}\n",
                        "{\"id\":\"a\",\"start\":0,\"end\":1,\"text\":\"x q z\"}\n", 0,
                        &wer.p) == LFS_OK);
  CHECK(wer.json()["corpus"]["micro_wer"].get<double>() == doctest::Approx(1.0 / 3));
  Text bad;
  CHECK(lfs_score_wer("{broken", "", 0, &bad.p) == LFS_ERR_FORMAT);

  Text cfg;
  REQUIRE(lfs_decode_config_normalize("{\"beams\": 2}", &cfg.p) == LFS_OK);
  CHECK(cfg.json()["beams"] == 2);
  Text invalid;
  CHECK(lfs_decode_config_normalize("{\"beams\": 0}", &invalid.p) == LFS_ERR_PARAMETER);
}
