// src/core/wer.cc

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

#include "core/wer.h"

#include <utility>

#include "core/error.h"

namespace lfs {
namespace {

// Lexicographic cost: fewer edits first, then more substitutions.
struct Cell {
  int32_t edits = 0;
  int32_t subs = 0;
  bool operator<(const Cell &o) const {
    return edits != o.edits ? edits < o.edits : subs > o.subs;
  }
};

}  // namespace

WerReport WerTokens(const std::vector<std::string> &ref,
                    const std::vector<std::string> &hyp) {
  const size_t n = ref.size();
  const size_t m = hyp.size();
  if (n == 0) {
    throw Error(ErrorKind::kUndefinedMetric,
                "WER is undefined for an empty reference");
  }
  std::vector<Cell> dp((n + 1) * (m + 1));
  auto at = [&](size_t i, size_t j) -> Cell & { return dp[i * (m + 1) + j]; };
  for (size_t i = 0; i <= n; ++i) at(i, 0) = {static_cast<int32_t>(i), 0};
  for (size_t j = 0; j <= m; ++j) at(0, j) = {static_cast<int32_t>(j), 0};
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      const bool same = ref[i - 1] == hyp[j - 1];
      Cell best = at(i - 1, j - 1);
      if (!same) {
        ++best.edits;
        ++best.subs;
      }
      Cell del = at(i - 1, j);
      ++del.edits;
      Cell ins = at(i, j - 1);
      ++ins.edits;
      if (del < best) best = del;
      if (ins < best) best = ins;
      at(i, j) = best;
    }
  }
  WerReport r;
  r.ref_word_count = static_cast<int64_t>(n);
  r.hyp_word_count = static_cast<int64_t>(m);
  r.substitutions = at(n, m).subs;
  // deletions - insertions = n - m for every alignment.
  const int64_t di = at(n, m).edits - r.substitutions;
  r.deletions = (di + static_cast<int64_t>(n) - static_cast<int64_t>(m)) / 2;
  r.insertions = di - r.deletions;
  r.wer = static_cast<double>(r.Edits()) / static_cast<double>(n);
  return r;
}

WerReport Wer(std::string_view ref, std::string_view hyp,
              const TextNormalizeOptions &options) {
  return WerTokens(Tokenize(ref, options), Tokenize(hyp, options));
}

nlohmann::ordered_json WerReportToJson(const WerReport &r) {
  nlohmann::ordered_json j;
  j["substitutions"] = r.substitutions;
  j["deletions"] = r.deletions;
  j["insertions"] = r.insertions;
  j["ref_word_count"] = r.ref_word_count;
  j["hyp_word_count"] = r.hyp_word_count;
  j["wer"] = r.wer;
  return j;
}

nlohmann::ordered_json WerCorpusToJson(const std::vector<NamedWer> &reports) {
  nlohmann::ordered_json doc;
  auto files = nlohmann::ordered_json::array();
  WerReport total;
  double macro = 0.0;
  for (const auto &[id, r] : reports) {
    nlohmann::ordered_json f;
    f["id"] = id;
    f.update(WerReportToJson(r));
    files.push_back(f);
    total.substitutions += r.substitutions;
    total.deletions += r.deletions;
    total.insertions += r.insertions;
    total.ref_word_count += r.ref_word_count;
    total.hyp_word_count += r.hyp_word_count;
    macro += r.wer;
  }
  doc["recordings"] = files;
  nlohmann::ordered_json corpus;
  corpus["recordings"] = reports.size();
  corpus["substitutions"] = total.substitutions;
  corpus["deletions"] = total.deletions;
  corpus["insertions"] = total.insertions;
  corpus["ref_word_count"] = total.ref_word_count;
  if (total.ref_word_count > 0) {
    corpus["micro_wer"] = static_cast<double>(total.Edits()) /
                          static_cast<double>(total.ref_word_count);
    corpus["macro_wer"] = macro / static_cast<double>(reports.size());
  } else {
    corpus["micro_wer"] = nullptr;
    corpus["macro_wer"] = nullptr;
  }
  doc["corpus"] = corpus;
  return doc;
}

}  // namespace lfs
