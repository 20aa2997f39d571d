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
#include <span>
#include <utility>
#include <vector>

#include "longspoof/audio_io.hpp"

namespace longspoof {

// ---------------------------------------------------------------------------
// Silence trimming
// ---------------------------------------------------------------------------

/// Frame parameters for leading/trailing silence removal. The defaults match
/// librosa.effects.trim.
struct TrimOptions {
  double top_db = 60.0;
  std::size_t frame_len = 2048;
  std::size_t hop_len = 512;
};

struct TrimReport {
  std::size_t start_sample = 0;
  std::size_t end_sample = 0;  // exclusive
  std::size_t original_len = 0;
};

/// Mean-square power of centred frames: frame t covers samples
/// [t*hop - frame_len/2, t*hop - frame_len/2 + frame_len), zero padded at both
/// ends, giving 1 + (len + 2*(frame_len/2) - frame_len) / hop frames.
std::vector<double> frame_power(std::span<const float> x, std::size_t frame_len,
                                std::size_t hop_len);

/// Keeps samples from the first to the last frame whose power is within
/// `top_db` of the loudest frame: [t_first*hop, min(len, (t_last+1)*hop)).
/// Interior silence is kept. If the loudest frame has zero power the result is
/// one frame starting at that frame's hop position, so the output is never
/// empty. Requires frame_len >= hop_len >= 1 and a non-empty buffer.
std::pair<AudioBuffer, TrimReport> trim_silence(const AudioBuffer& buf,
                                                const TrimOptions& options = {});

// ---------------------------------------------------------------------------
// Active speech level (ITU-T P.56, method B)
// ---------------------------------------------------------------------------

struct SpeechLevel {
  double active_level_db = 0.0;     // dBFS, full-scale square wave = 0 dB
  double long_term_level_db = 0.0;  // plain RMS level, dBFS
  double activity = 0.0;            // fraction of samples counted active
};

/// Envelope: two cascaded one-pole smoothers of |x| with g = exp(-1/(fs*0.03)).
/// Sixteen thresholds c = 2^-15 .. 2^0 each count a sample active while the
/// envelope is at or above them or within a 0.2 s hangover afterwards. For
/// each threshold A = 10*log10(Σx²/count) and the level is where A - C(dB)
/// crosses the 15.9 dB margin, interpolating linearly in dB between
/// neighbouring thresholds.
/// Throws kNoActivity when nothing is active (e.g. digital silence) and
/// kInvalidArgument for buffers shorter than 10 ms.
SpeechLevel measure_speech_level(const AudioBuffer& buf);

/// Shorthand for measure_speech_level(buf).active_level_db.
double active_speech_level(const AudioBuffer& buf);

// ---------------------------------------------------------------------------
// Loudness normalization
// ---------------------------------------------------------------------------

struct LoudnessReport {
  double active_level_db = 0.0;
  double target_db = 0.0;
  double gain_linear = 1.0;  // == 10^((target_db - active_level_db) / 20)
  bool clipping_risk = false;  // some output |sample| > 1; not clipped here
};

std::pair<AudioBuffer, LoudnessReport> normalize_loudness(const AudioBuffer& buf,
                                                          double target_db);

/// Trim followed by normalization to `target_db`; labels are untouched by
/// construction since only audio flows through here.
AudioBuffer standardize(const AudioBuffer& buf, double target_db, const TrimOptions& trim = {},
                        LoudnessReport* report = nullptr);

}  // namespace longspoof
