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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace longspoof {

inline constexpr int kSampleRate = 16000;

/// Mono PCM audio. Samples are nominally in [-1, 1]; intermediate pipeline
/// stages may exceed that range, clamping happens only when writing.
struct AudioBuffer {
  std::vector<float> samples;
  int sample_rate = kSampleRate;

  std::size_t size() const noexcept { return samples.size(); }
  bool empty() const noexcept { return samples.empty(); }
  double duration_seconds() const noexcept {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

/// Reads a RIFF/WAVE file holding mono 16 kHz audio, either 16-bit integer
/// PCM (mapped to [-1, 1) by dividing by 32768) or 32-bit IEEE float.
/// Throws kNotWav on bad magic and kUnsupportedFormat for anything else,
/// including other sample rates: no resampling or downmixing happens here.
AudioBuffer load_wav(const std::filesystem::path& path);

/// Writes 16-bit PCM mono. Samples are clamped to [-1, 1 - 1/32768] and
/// rounded to the nearest integer code. The file is written to a temporary
/// name and renamed into place.
void save_wav(const AudioBuffer& buf, const std::filesystem::path& path);

/// Encodes a buffer as a complete WAV byte image (same rules as save_wav).
std::vector<std::uint8_t> encode_wav(const AudioBuffer& buf);

/// Decodes a WAV byte image (same rules as load_wav).
AudioBuffer decode_wav(const std::vector<std::uint8_t>& bytes);

/// Integer code save_wav will store for one sample.
std::int16_t quantize_sample(float x) noexcept;

}  // namespace longspoof
