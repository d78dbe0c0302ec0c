// src/core/embedding-container.cc

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

#include "core/embedding-container.h"

#include <bit>
#include <cmath>
#include <cstring>

#include "core/error.h"
#include "core/wav-io.h"

namespace lfs {
namespace {

constexpr char kMagic[4] = {'E', 'M', 'B', '1'};
constexpr size_t kHeaderBytes = 14;

class Reader {
 public:
  explicit Reader(const std::vector<uint8_t> &bytes) : bytes_(bytes) {}

  size_t offset() const { return pos_; }

  // count * width bytes, without overflowing on absurd headers.
  void Need(uint64_t count, const char *what, uint64_t width = 1) const {
    const uint64_t left = bytes_.size() - pos_;
    if (count > left / width) {
      const uint64_t n = count * width;
      ThrowFormat("embedding container truncated at offset " +
                  std::to_string(bytes_.size()) + ": " + what + " needs " +
                  std::to_string(n) + " bytes from offset " +
                  std::to_string(pos_));
    }
  }

  uint64_t Uint(int width) {
    uint64_t v = 0;
    for (int i = 0; i < width; ++i) {
      v |= static_cast<uint64_t>(bytes_[pos_ + i]) << (8 * i);
    }
    pos_ += width;
    return v;
  }

  const uint8_t *Take(size_t n) {
    const uint8_t *p = bytes_.data() + pos_;
    pos_ += n;
    return p;
  }

 private:
  const std::vector<uint8_t> &bytes_;
  size_t pos_ = 0;
};

void PutUint(std::vector<uint8_t> *out, uint64_t v, int width) {
  for (int i = 0; i < width; ++i) out->push_back(static_cast<uint8_t>(v >> (8 * i)));
}

}  // namespace

Eigen::MatrixXd EmbeddingSet::ToMatrix() const {
  const Eigen::Index n = static_cast<Eigen::Index>(size());
  Eigen::MatrixXd m(n, dim);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(dim); ++j) {
      m(i, j) = data[i * dim + j];
    }
  }
  return m;
}

void Validate(const EmbeddingSet &set) {
  if (set.data.size() != set.spans.size() * set.dim) {
    ThrowStructural("embedding set holds " + std::to_string(set.data.size()) +
                    " values for " + std::to_string(set.spans.size()) +
                    " windows of dimension " + std::to_string(set.dim));
  }
  if (!set.spans.empty() && set.dim == 0) {
    ThrowStructural("embedding dimension must be >= 1");
  }
  for (size_t i = 0; i < set.spans.size(); ++i) {
    if (!IsValid(set.spans[i])) {
      ThrowStructural("embedding window " + std::to_string(i) + " has an invalid span");
    }
    if (i > 0 && set.spans[i].start < set.spans[i - 1].start) {
      ThrowStructural("embedding windows are not sorted by start at " +
                      std::to_string(i));
    }
  }
  for (float v : set.data) {
    if (!std::isfinite(v)) ThrowStructural("embedding values must be finite");
  }
}

EmbeddingSet ReadEmbeddings(const std::vector<uint8_t> &bytes) {
  Reader in(bytes);
  in.Need(kHeaderBytes, "header");
  if (std::memcmp(in.Take(4), kMagic, 4) != 0) {
    ThrowFormat("embedding container: bad magic at offset 0 (expected EMB1)");
  }
  const uint64_t version = in.Uint(2);
  if (version != kEmbeddingContainerVersion) {
    ThrowFormat("embedding container: unsupported version " +
                std::to_string(version) + " at offset 4");
  }
  const uint64_t n = in.Uint(4);
  const uint64_t d = in.Uint(4);
  if (n > 0 && d == 0) {
    ThrowFormat("embedding container: dimension 0 at offset 10 with " +
                std::to_string(n) + " vectors");
  }
  EmbeddingSet set;
  set.dim = static_cast<uint32_t>(d);

  const uint64_t values = n * d;
  in.Need(values, "vector payload", 4);
  set.data.resize(values);
  for (uint64_t i = 0; i < values; ++i) {
    const size_t at = in.offset();
    set.data[i] = std::bit_cast<float>(static_cast<uint32_t>(in.Uint(4)));
    if (!std::isfinite(set.data[i])) {
      ThrowFormat("embedding container: non-finite value at offset " +
                  std::to_string(at));
    }
  }

  in.Need(n, "span table", 16);
  set.spans.resize(n);
  for (uint64_t i = 0; i < n; ++i) {
    const size_t at = in.offset();
    TimeSpan s;
    s.start = std::bit_cast<double>(in.Uint(8));
    s.end = std::bit_cast<double>(in.Uint(8));
    if (!IsValid(s)) {
      ThrowFormat("embedding container: invalid span at offset " +
                  std::to_string(at));
    }
    if (i > 0 && s.start < set.spans[i - 1].start) {
      ThrowFormat("embedding container: unsorted span at offset " +
                  std::to_string(at));
    }
    set.spans[i] = s;
  }

  in.Need(4, "recording id length");
  const uint64_t id_len = in.Uint(4);
  in.Need(id_len, "recording id");
  const uint8_t *id = in.Take(id_len);
  set.recording_id.assign(reinterpret_cast<const char *>(id), id_len);
  if (in.offset() != bytes.size()) {
    ThrowFormat("embedding container: " +
                std::to_string(bytes.size() - in.offset()) +
                " trailing bytes at offset " + std::to_string(in.offset()));
  }
  return set;
}

std::vector<uint8_t> WriteEmbeddings(const EmbeddingSet &set) {
  Validate(set);
  std::vector<uint8_t> out;
  out.reserve(kHeaderBytes + set.data.size() * 4 + set.spans.size() * 16 + 4 +
              set.recording_id.size());
  out.insert(out.end(), kMagic, kMagic + 4);
  PutUint(&out, kEmbeddingContainerVersion, 2);
  PutUint(&out, set.spans.size(), 4);
  PutUint(&out, set.dim, 4);
  for (float v : set.data) PutUint(&out, std::bit_cast<uint32_t>(v), 4);
  for (const auto &s : set.spans) {
    PutUint(&out, std::bit_cast<uint64_t>(s.start), 8);
    PutUint(&out, std::bit_cast<uint64_t>(s.end), 8);
  }
  PutUint(&out, set.recording_id.size(), 4);
  out.insert(out.end(), set.recording_id.begin(), set.recording_id.end());
  return out;
}

EmbeddingSet ReadEmbeddingsFile(const std::string &path) {
  try {
    return ReadEmbeddings(ReadFileBytes(path));
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::kFormat) throw;
    ThrowFormat(path + ": " + e.what());
  }
}

void WriteEmbeddingsFile(const std::string &path, const EmbeddingSet &set) {
  const std::vector<uint8_t> bytes = WriteEmbeddings(set);
  WriteFileAtomic(path, bytes.data(), bytes.size());
}

}  // namespace lfs
