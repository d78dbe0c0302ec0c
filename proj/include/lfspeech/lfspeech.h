// include/lfspeech/lfspeech.h

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

#ifndef LFSPEECH_LFSPEECH_H_
#define LFSPEECH_LFSPEECH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(LFS_BUILDING_LIBRARY)
#define LFS_API __declspec(dllexport)
#else
#define LFS_API __declspec(dllimport)
#endif
#else
#define LFS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every fallible call returns a status. On failure a message describing the
 * error is available from lfs_last_error() on the same thread until the
 * next failing call. Output pointers are untouched on failure. */
typedef enum lfs_status {
  LFS_OK = 0,
  LFS_ERR_PARAMETER = 1,        /* argument outside its domain */
  LFS_ERR_STRUCTURAL = 2,       /* inputs inconsistent with each other */
  LFS_ERR_FORMAT = 3,           /* malformed file or text */
  LFS_ERR_IO = 4,               /* file system failure */
  LFS_ERR_UNDEFINED_METRIC = 5, /* metric has no value for these inputs */
  LFS_ERR_INTERNAL = 6
} lfs_status;

LFS_API const char *lfs_last_error(void);
LFS_API const char *lfs_status_name(lfs_status status);
LFS_API const char *lfs_version(void);

/* Strings returned through char** are NUL-terminated and owned by the
 * caller. */
LFS_API void lfs_string_free(char *s);

typedef struct lfs_span {
  double start; /* seconds */
  double end;
} lfs_span;

LFS_API void lfs_spans_free(lfs_span *spans);

/* ---- waveforms ---------------------------------------------------------- */

typedef struct lfs_waveform lfs_waveform;

/* PCM16 or float32 WAV, downmixed to mono. */
LFS_API lfs_status lfs_waveform_read(const char *path, lfs_waveform **out);
LFS_API lfs_status lfs_waveform_create(const float *samples, size_t count,
                                       int32_t sample_rate, lfs_waveform **out);
/* float32 != 0 writes IEEE float, otherwise 16-bit PCM. */
LFS_API lfs_status lfs_waveform_write(const lfs_waveform *w, const char *path,
                                      int float32);
LFS_API void lfs_waveform_free(lfs_waveform *w);
LFS_API size_t lfs_waveform_length(const lfs_waveform *w);
LFS_API int32_t lfs_waveform_sample_rate(const lfs_waveform *w);
LFS_API double lfs_waveform_duration(const lfs_waveform *w);
LFS_API const float *lfs_waveform_samples(const lfs_waveform *w);

typedef struct lfs_preprocess_options {
  int32_t target_rate; /* 16000; 0 keeps the input rate */
  double highpass_hz;  /* 60; 0 disables */
  double peak_target;  /* 0.98; 0 disables */
} lfs_preprocess_options;

LFS_API lfs_preprocess_options lfs_preprocess_options_default(void);

/* Resample, high-pass, then peak-normalize. */
LFS_API lfs_status lfs_waveform_preprocess(const lfs_waveform *in,
                                           const lfs_preprocess_options *opts,
                                           lfs_waveform **out);

typedef struct lfs_silence_options {
  double top_db;        /* 25 */
  int32_t frame_length; /* 2048 */
  int32_t hop_length;   /* 512 */
} lfs_silence_options;

LFS_API lfs_silence_options lfs_silence_options_default(void);

/* Non-silent spans; free with lfs_spans_free. */
LFS_API lfs_status lfs_split_on_silence(const lfs_waveform *w,
                                        const lfs_silence_options *opts,
                                        lfs_span **spans, size_t *count);

typedef struct lfs_music_options {
  int32_t frame_length;       /* 1024 */
  int32_t hop_length;         /* 256 */
  double window_seconds;      /* 1.0 */
  double flux_threshold;      /* 0.08 */
  double peak_rate_threshold; /* 1.5 peaks per second */
  double onset_threshold;     /* 0.15 */
  double decision_threshold;  /* 0.5 */
  double min_confident_seconds; /* 3.0 */
} lfs_music_options;

typedef struct lfs_music_result {
  double score;
  int is_music;
  int low_confidence;
  int32_t windows;
  int32_t music_windows;
} lfs_music_result;

LFS_API lfs_music_options lfs_music_options_default(void);
LFS_API lfs_status lfs_detect_music(const lfs_waveform *w,
                                    const lfs_music_options *opts,
                                    lfs_music_result *result);

/* ---- chunk planning ----------------------------------------------------- */

typedef struct lfs_chunk_options {
  double min_dur; /* 20 */
  double max_dur; /* 30 */
  int include_leading_silence;
} lfs_chunk_options;

typedef struct lfs_chunk_plan lfs_chunk_plan;

LFS_API lfs_chunk_options lfs_chunk_options_default(void);
LFS_API lfs_status lfs_chunk_plan_create(const lfs_span *nonsilent,
                                         size_t count, double total_duration,
                                         const lfs_chunk_options *opts,
                                         lfs_chunk_plan **out);
/* Back-to-back fixed-length chunks, for baseline comparisons. */
LFS_API lfs_status lfs_chunk_plan_fixed(double total_duration,
                                        double chunk_seconds,
                                        lfs_chunk_plan **out);
LFS_API void lfs_chunk_plan_free(lfs_chunk_plan *plan);
LFS_API size_t lfs_chunk_plan_count(const lfs_chunk_plan *plan);
LFS_API int32_t lfs_chunk_plan_forced_splits(const lfs_chunk_plan *plan);
/* kind is "silence", "forced" or "end-of-audio"; static storage. */
LFS_API lfs_status lfs_chunk_plan_get(const lfs_chunk_plan *plan, size_t index,
                                      lfs_span *span, const char **kind);
/* opts (nullable) is echoed as the plan's config. */
LFS_API lfs_status lfs_chunk_plan_to_json(const lfs_chunk_plan *plan,
                                          const char *recording_id,
                                          const lfs_chunk_options *opts,
                                          char **json);
LFS_API lfs_status lfs_chunk_plan_extract(const lfs_chunk_plan *plan,
                                          const lfs_waveform *w, size_t index,
                                          lfs_waveform **out);
/* Counts words that straddle chunk boundaries. words_jsonl holds one word
 * per line in the transcript format; recording_id (nullable) filters it. */
LFS_API lfs_status lfs_chunk_plan_audit_json(const lfs_chunk_plan *plan,
                                             const char *words_jsonl,
                                             const char *recording_id,
                                             char **json);

/* ---- embeddings and clustering ------------------------------------------ */

typedef struct lfs_embedding_set lfs_embedding_set;

LFS_API lfs_status lfs_embedding_set_read(const char *path,
                                          lfs_embedding_set **out);
/* data is count x dim, row-major. */
LFS_API lfs_status lfs_embedding_set_create(const char *recording_id,
                                            const float *data, size_t count,
                                            uint32_t dim, const lfs_span *spans,
                                            lfs_embedding_set **out);
/* Atomic write (temporary file plus rename). */
LFS_API lfs_status lfs_embedding_set_write(const lfs_embedding_set *set,
                                           const char *path);
LFS_API void lfs_embedding_set_free(lfs_embedding_set *set);
LFS_API size_t lfs_embedding_set_count(const lfs_embedding_set *set);
LFS_API uint32_t lfs_embedding_set_dim(const lfs_embedding_set *set);
LFS_API const char *lfs_embedding_set_recording_id(const lfs_embedding_set *set);

typedef enum lfs_cluster_method {
  LFS_CLUSTER_AHC = 0,
  LFS_CLUSTER_KMEANS = 1,
  LFS_CLUSTER_GMM = 2,
  LFS_CLUSTER_OVERCLUSTER = 3
} lfs_cluster_method;

typedef enum lfs_criterion { LFS_CRITERION_AIC = 0, LFS_CRITERION_BIC = 1 } lfs_criterion;

typedef struct lfs_cluster_options {
  lfs_cluster_method method; /* ahc */
  double tau;                /* 0.65, cosine distance */
  int32_t min_cluster_size;  /* 20 */
  int32_t pca_components;    /* 64, k-means and GMM only; 0 disables */
  int32_t num_clusters;      /* 0 estimates */
  int32_t k_min;             /* 1 */
  int32_t k_max;             /* 10 */
  lfs_criterion criterion;   /* AIC */
  int32_t restarts;          /* 3 */
  int32_t overcluster_k;     /* 25 */
  int32_t smoothing_window;  /* 0: 5 for over-clustering, none otherwise */
  uint64_t seed;             /* 0 */
} lfs_cluster_options;

LFS_API lfs_cluster_options lfs_cluster_options_default(void);
LFS_API lfs_status lfs_cluster_method_parse(const char *name,
                                            lfs_cluster_method *method);
/* {"options", "result": {"method", "k", "labels", "centroids",
 * "diagnostics"}} */
LFS_API lfs_status lfs_cluster_json(const lfs_embedding_set *set,
                                    const lfs_cluster_options *opts,
                                    char **json);

/* ---- timelines ---------------------------------------------------------- */

typedef struct lfs_timeline_set lfs_timeline_set;

typedef enum lfs_timeline_format {
  LFS_FORMAT_RTTM = 0,
  LFS_FORMAT_CSV = 1 /* id,start,end,speaker */
} lfs_timeline_format;

LFS_API lfs_status lfs_timeline_set_create(lfs_timeline_set **out);
/* CSV in non-strict mode runs the repair rules. */
LFS_API lfs_status lfs_timeline_set_parse(const char *text,
                                          lfs_timeline_format format,
                                          int strict, lfs_timeline_set **out);
/* Copies src into dst; recordings with equal ids are fused. */
LFS_API lfs_status lfs_timeline_set_append(lfs_timeline_set *dst,
                                           const lfs_timeline_set *src);
LFS_API lfs_status lfs_timeline_set_to_text(const lfs_timeline_set *set,
                                            lfs_timeline_format format,
                                            char **text);
LFS_API void lfs_timeline_set_free(lfs_timeline_set *set);
LFS_API size_t lfs_timeline_set_count(const lfs_timeline_set *set);
LFS_API const char *lfs_timeline_set_recording_id(const lfs_timeline_set *set,
                                                  size_t index);
LFS_API size_t lfs_timeline_set_segment_count(const lfs_timeline_set *set,
                                              size_t index);
LFS_API lfs_status lfs_timeline_set_segment(const lfs_timeline_set *set,
                                            size_t index, size_t segment,
                                            lfs_span *span,
                                            const char **speaker);

/* Parses a segments CSV and returns the repaired text plus a JSON repair
 * report. In strict mode the first malformed row fails the call. */
LFS_API lfs_status lfs_repair_csv(const char *text, int strict,
                                  char **repaired, char **report_json);

/* ---- diarization -------------------------------------------------------- */

typedef struct lfs_diarize_options {
  lfs_cluster_options clustering;
  double min_duration_off; /* 0.1 */
} lfs_diarize_options;

LFS_API lfs_diarize_options lfs_diarize_options_default(void);
/* cluster_json (nullable) receives the clustering result. */
LFS_API lfs_status lfs_diarize(const lfs_embedding_set *set,
                               const lfs_diarize_options *opts,
                               lfs_timeline_set **out, char **cluster_json);

typedef struct lfs_window {
  lfs_span span;
  int short_window; /* whole speech span, shorter than the window */
} lfs_window;

LFS_API void lfs_windows_free(lfs_window *windows);
/* Sliding windows inside sorted, disjoint speech spans. */
LFS_API lfs_status lfs_window_schedule(const lfs_span *speech, size_t count,
                                       double window, double hop,
                                       lfs_window **windows,
                                       size_t *window_count);

/* ---- scoring ------------------------------------------------------------ */

typedef struct lfs_der_options {
  double collar;    /* 0 */
  int skip_overlap; /* 0 */
} lfs_der_options;

LFS_API lfs_der_options lfs_der_options_default(void);
/* Pairs recordings by id. JSON holds per-recording reports, recordings
 * that could not be scored, and corpus micro/macro averages. */
LFS_API lfs_status lfs_score_der(const lfs_timeline_set *ref,
                                 const lfs_timeline_set *hyp,
                                 const lfs_der_options *opts, char **json);
/* Transcripts JSONL on both sides; texts of a recording are joined in
 * start order. */
LFS_API lfs_status lfs_score_wer(const char *ref_jsonl, const char *hyp_jsonl,
                                 int strip_punctuation, char **json);

/* ---- ASR decoding configuration ----------------------------------------- */

/* Validates a decode configuration document and returns it with defaults
 * filled in. */
LFS_API lfs_status lfs_decode_config_normalize(const char *json_text,
                                               char **normalized);

#ifdef __cplusplus
}
#endif

#endif /* LFSPEECH_LFSPEECH_H_ */
