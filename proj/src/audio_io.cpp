// Copyright 2026 The longspoof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "longspoof/audio_io.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "longspoof/errors.hpp"
#include "longspoof/manifest.hpp"

namespace longspoof {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t read_u16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t read_u32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xFF));
}

void put_tag(std::vector<std::uint8_t>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

}  // namespace

std::int16_t quantize_sample(float x) noexcept {
  constexpr float kMax = 1.0f - 1.0f / 32768.0f;
  float c = x;
  if (!(c >= -1.0f)) c = -1.0f;  // also catches NaN
  if (c > kMax) c = kMax;
  return static_cast<std::int16_t>(std::lrint(c * 32768.0f));
}

std::vector<std::uint8_t> encode_wav(const AudioBuffer& buf) {
  const auto data_bytes = static_cast<std::uint32_t>(buf.samples.size() * 2);
  std::vector<std::uint8_t> out;
  out.reserve(44 + data_bytes);
  put_tag(out, "RIFF");
  put_u32(out, 36 + data_bytes);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put_u32(out, 16);
  put_u16(out, kFormatPcm);
  put_u16(out, 1);
  put_u32(out, static_cast<std::uint32_t>(buf.sample_rate));
  put_u32(out, static_cast<std::uint32_t>(buf.sample_rate) * 2);
  put_u16(out, 2);
  put_u16(out, 16);
  put_tag(out, "data");
  put_u32(out, data_bytes);
  for (float x : buf.samples) put_u16(out, static_cast<std::uint16_t>(quantize_sample(x)));
  return out;
}

AudioBuffer decode_wav(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw Error(ErrorCode::kNotWav, "missing RIFF/WAVE magic");
  }
  bool have_fmt = false;
  std::uint16_t format = 0, channels = 0, block_align = 0, bits = 0;
  std::uint32_t rate = 0;
  const std::uint8_t* data = nullptr;
  std::size_t data_size = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint8_t* chunk = bytes.data() + pos;
    const std::uint32_t size = read_u32(chunk + 4);
    const std::size_t body = pos + 8;
    const std::size_t available = bytes.size() - body;
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size < 16 || available < 16) throw Error(ErrorCode::kNotWav, "truncated fmt chunk");
      const std::uint8_t* f = bytes.data() + body;
      format = read_u16(f);
      channels = read_u16(f + 2);
      rate = read_u32(f + 4);
      block_align = read_u16(f + 12);
      bits = read_u16(f + 14);
      if (format == kFormatExtensible) {
        if (size < 26 || available < 26) throw Error(ErrorCode::kNotWav, "truncated fmt chunk");
        format = read_u16(f + 24);  // first two bytes of the sub-format GUID
      }
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = bytes.data() + body;
      // Streaming writers sometimes leave the size at 0 or 0xFFFFFFFF.
      data_size = (size == 0 || size > available) ? available : size;
      break;
    }
    pos = body + size + (size & 1u);
  }
  if (!have_fmt || data == nullptr) throw Error(ErrorCode::kNotWav, "missing fmt or data chunk");
  if (channels != 1) {
    throw Error(ErrorCode::kUnsupportedFormat,
                "expected mono, got " + std::to_string(channels) + " channels");
  }
  if (rate != static_cast<std::uint32_t>(kSampleRate)) {
    throw Error(ErrorCode::kUnsupportedFormat,
                "expected 16000 Hz, got " + std::to_string(rate) + " Hz (resample first)");
  }
  const bool pcm16 = format == kFormatPcm && bits == 16;
  const bool float32 = format == kFormatFloat && bits == 32;
  if (!pcm16 && !float32) {
    throw Error(ErrorCode::kUnsupportedFormat, "encoding format=" + std::to_string(format) +
                                                   " bits=" + std::to_string(bits));
  }
  const std::size_t frame_bytes = pcm16 ? 2 : 4;
  if (block_align != frame_bytes) throw Error(ErrorCode::kUnsupportedFormat, "bad block align");
  const std::size_t frames = data_size / frame_bytes;
  if (frames == 0) throw Error(ErrorCode::kUnsupportedFormat, "no samples");

  AudioBuffer buf;
  buf.sample_rate = kSampleRate;
  buf.samples.resize(frames);
  for (std::size_t i = 0; i < frames; ++i) {
    if (pcm16) {
      const auto v = static_cast<std::int16_t>(read_u16(data + 2 * i));
      buf.samples[i] = static_cast<float>(v) / 32768.0f;
    } else {
      const std::uint32_t raw = read_u32(data + 4 * i);
      float v;
      std::memcpy(&v, &raw, sizeof v);
      if (!std::isfinite(v)) throw Error(ErrorCode::kUnsupportedFormat, "non-finite sample");
      buf.samples[i] = v;
    }
  }
  return buf;
}

AudioBuffer load_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  try {
    return decode_wav(bytes);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.detail());
  }
}

void save_wav(const AudioBuffer& buf, const std::filesystem::path& path) {
  const auto bytes = encode_wav(buf);
  write_file_atomic(path, std::string_view(reinterpret_cast<const char*>(bytes.data()),
                                           bytes.size()));
}

}  // namespace longspoof
