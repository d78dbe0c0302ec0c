// src/core/wav-io.cc

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

#include "core/wav-io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>

#include "core/error.h"

namespace lfs {
namespace {

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatFloat = 3;
constexpr uint16_t kFormatExtensible = 0xFFFE;

uint16_t ReadU16(const uint8_t *p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

uint32_t ReadU32(const uint8_t *p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

void PutU16(std::vector<uint8_t> *out, uint16_t v) {
  out->push_back(v & 0xFF);
  out->push_back(v >> 8);
}

void PutU32(std::vector<uint8_t> *out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out->push_back((v >> (8 * i)) & 0xFF);
}

void PutTag(std::vector<uint8_t> *out, const char *tag) {
  out->insert(out->end(), tag, tag + 4);
}

}  // namespace

WavData DecodeWav(const std::vector<uint8_t> &bytes) {
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    ThrowFormat("not a RIFF/WAVE file");
  }
  uint16_t format = 0, channels = 0, bits = 0, block_align = 0;
  uint32_t rate = 0;
  bool have_fmt = false;
  const uint8_t *data = nullptr;
  std::size_t data_size = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const uint8_t *chunk = bytes.data() + pos;
    const uint32_t size = ReadU32(chunk + 4);
    const std::size_t body = pos + 8;
    const std::size_t available = bytes.size() - body;
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size < 16 || size > available) ThrowFormat("truncated fmt chunk");
      format = ReadU16(chunk + 8);
      channels = ReadU16(chunk + 10);
      rate = ReadU32(chunk + 12);
      block_align = ReadU16(chunk + 20);
      bits = ReadU16(chunk + 22);
      if (format == kFormatExtensible) {
        if (size < 40) ThrowFormat("truncated extensible fmt chunk");
        // The sub-format GUID starts with the plain format tag.
        format = ReadU16(chunk + 8 + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = chunk + 8;
      // Streams written before their length was known carry 0 or 0xFFFFFFFF.
      data_size = std::min<std::size_t>(size, available);
      if (size == 0) data_size = available;
      break;
    }
    pos = body + size + (size & 1);
  }
  if (!have_fmt) ThrowFormat("missing fmt chunk");
  if (data == nullptr) ThrowFormat("missing data chunk");
  if (channels == 0) ThrowFormat("zero channels");
  if (rate == 0) ThrowFormat("zero sample rate");

  const bool pcm16 = format == kFormatPcm && bits == 16;
  const bool float32 = format == kFormatFloat && bits == 32;
  if (!pcm16 && !float32) {
    ThrowFormat("unsupported WAV encoding (format tag " +
                std::to_string(format) + ", " + std::to_string(bits) +
                " bits); only 16-bit PCM and 32-bit float are accepted");
  }
  const std::size_t bytes_per_sample = bits / 8;
  if (block_align != bytes_per_sample * channels) {
    ThrowFormat("inconsistent block alignment");
  }
  const std::size_t frames = data_size / block_align;

  WavData out;
  out.sample_rate = static_cast<int32_t>(rate);
  out.channels.assign(channels, std::vector<float>(frames));
  for (std::size_t f = 0; f < frames; ++f) {
    const uint8_t *frame = data + f * block_align;
    for (uint16_t c = 0; c < channels; ++c) {
      const uint8_t *p = frame + c * bytes_per_sample;
      float v;
      if (pcm16) {
        v = static_cast<int16_t>(ReadU16(p)) / 32768.0f;
      } else {
        uint32_t raw = ReadU32(p);
        std::memcpy(&v, &raw, sizeof(v));
        if (!std::isfinite(v)) {
          ThrowFormat("non-finite float sample at frame " + std::to_string(f));
        }
      }
      out.channels[c][f] = v;
    }
  }
  return out;
}

std::vector<uint8_t> EncodeWav(const Waveform &w, WavEncoding encoding) {
  const bool pcm16 = encoding == WavEncoding::kPcm16;
  const uint16_t bits = pcm16 ? 16 : 32;
  const uint32_t data_size =
      static_cast<uint32_t>(w.samples.size() * (bits / 8));
  std::vector<uint8_t> out;
  out.reserve(44 + data_size);
  PutTag(&out, "RIFF");
  PutU32(&out, 36 + data_size);
  PutTag(&out, "WAVE");
  PutTag(&out, "fmt ");
  PutU32(&out, 16);
  PutU16(&out, pcm16 ? kFormatPcm : kFormatFloat);
  PutU16(&out, 1);
  PutU32(&out, static_cast<uint32_t>(w.sample_rate));
  PutU32(&out, static_cast<uint32_t>(w.sample_rate) * (bits / 8));
  PutU16(&out, bits / 8);
  PutU16(&out, bits);
  PutTag(&out, "data");
  PutU32(&out, data_size);
  for (float s : w.samples) {
    if (pcm16) {
      const long q = std::lround(static_cast<double>(s) * 32768.0);
      PutU16(&out, static_cast<uint16_t>(static_cast<int16_t>(
                       std::clamp<long>(q, -32768, 32767))));
    } else {
      uint32_t raw;
      std::memcpy(&raw, &s, sizeof(raw));
      PutU32(&out, raw);
    }
  }
  return out;
}

std::vector<uint8_t> ReadFileBytes(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorKind::kIo, "read failed: " + path);
  return bytes;
}

void WriteFileAtomic(const std::string &path, const void *data,
                     std::size_t size) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::kIo, "cannot create " + tmp);
    out.write(static_cast<const char *>(data),
              static_cast<std::streamsize>(size));
    if (!out) throw Error(ErrorKind::kIo, "write failed: " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorKind::kIo, "cannot rename into " + path);
  }
}

WavData ReadWavFile(const std::string &path) {
  try {
    return DecodeWav(ReadFileBytes(path));
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::kFormat) {
      ThrowFormat(path + ": " + e.what());
    }
    throw;
  }
}

void WriteWavFile(const std::string &path, const Waveform &w,
                  WavEncoding encoding) {
  const auto bytes = EncodeWav(w, encoding);
  WriteFileAtomic(path, bytes.data(), bytes.size());
}

Waveform ReadWavMono(const std::string &path) {
  WavData wav = ReadWavFile(path);
  return DownmixMono(wav.channels, wav.sample_rate);
}

}  // namespace lfs
