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

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "longspoof/audio_cache.hpp"
#include "longspoof/audio_io.hpp"
#include "longspoof/rng.hpp"

namespace longspoof {

enum class NoiseCategory { kBabble, kMusic, kNoise };

inline constexpr std::array<NoiseCategory, 3> kNoiseCategories = {
    NoiseCategory::kBabble, NoiseCategory::kMusic, NoiseCategory::kNoise};

/// Wire names are lowercase: "babble", "music", "noise".
std::string_view to_string(NoiseCategory category);
NoiseCategory parse_noise_category(std::string_view text);

/// One concrete noise draw for a segment.
struct AppliedNoise {
  NoiseCategory category = NoiseCategory::kNoise;
  double snr_db = 0.0;
  std::string clip_id;
  std::uint64_t offset = 0;  // raw draw; reduced modulo the valid crop range when fitting

  bool operator==(const AppliedNoise&) const = default;
};

/// Either no noise (nullopt) or exactly one category.
using NoiseAssignment = std::optional<AppliedNoise>;

struct NoiseConfig {
  double snr_min_db = 0.0;
  double snr_max_db = 10.0;
  /// Relative weights of {none, babble, music, noise}.
  std::array<double, 4> weights = {0.25, 0.25, 0.25, 0.25};

  /// Every segment left clean.
  static NoiseConfig clean() {
    NoiseConfig c;
    c.weights = {1.0, 0.0, 0.0, 0.0};
    return c;
  }
  bool is_clean() const { return weights[1] <= 0 && weights[2] <= 0 && weights[3] <= 0; }
};

struct NoiseClip {
  std::string id;
  std::filesystem::path path;  // relative to the pool root unless absolute
  NoiseCategory category = NoiseCategory::kNoise;
};

/// Categorized noise clips. The clip lists are fixed at construction; audio
/// is decoded lazily through a thread-safe cache, so one pool can be shared by
/// every render worker.
class NoisePool {
 public:
  NoisePool() = default;
  NoisePool(std::vector<NoiseClip> clips, std::filesystem::path root,
            std::size_t cache_bytes = std::size_t{512} << 20);

  /// Pool backed by in-memory audio.
  static NoisePool in_memory(std::vector<std::pair<NoiseClip, AudioBuffer>> clips);

  /// Reads a JSONL manifest with one {"id", "path", "category"} object per
  /// line; paths resolve against the manifest's directory unless `root` is given.
  static NoisePool from_manifest(const std::filesystem::path& manifest,
                                 std::optional<std::filesystem::path> root = std::nullopt);

  const std::vector<NoiseClip>& clips(NoiseCategory category) const;
  std::size_t total_clips() const;

  std::shared_ptr<const AudioBuffer> audio(const std::string& clip_id) const;

 private:
  std::array<std::vector<NoiseClip>, 3> by_category_;
  std::unordered_map<std::string, NoiseClip> by_id_;
  std::unordered_map<std::string, std::shared_ptr<const AudioBuffer>> resident_;
  std::filesystem::path root_;
  std::shared_ptr<AudioCache> cache_;
};

/// Draws none-or-one-category with the configured weights, then (for a
/// category) SNR ~ U[snr_min, snr_max], a uniformly chosen clip and a raw
/// offset. Throws kEmptyCategory when the chosen category has no clips and
/// kInvalidArgument for unusable weights or SNR range.
NoiseAssignment draw_assignment(RngStream& rng, const NoiseConfig& config,
                                const NoisePool* pool);

/// Crop or tile `noise` to exactly `target_len` samples. Long noise is
/// cropped contiguously starting at offset mod (len - target + 1); short noise
/// is repeated end to end and then cropped from its start.
AudioBuffer fit_noise_length(const AudioBuffer& noise, std::size_t target_len,
                             std::uint64_t offset = 0);

/// Scale factor making 20*log10(rms_speech / (alpha*rms_noise)) == snr_db.
double snr_gain(double rms_speech, double rms_noise, double snr_db);

struct MixResult {
  AudioBuffer audio;
  double alpha = 0.0;      // gain applied to the fitted noise
  AudioBuffer fitted_noise;
};

/// Adds fitted noise to speech at an exact RMS-defined SNR. Output length
/// equals speech length. Throws kSilentNoise when the fitted noise has zero
/// RMS and kInvalidArgument for empty speech.
MixResult mix_at_snr_detailed(const AudioBuffer& speech, const AudioBuffer& noise, double snr_db,
                              std::uint64_t offset = 0);

AudioBuffer mix_at_snr(const AudioBuffer& speech, const AudioBuffer& noise, double snr_db,
                       std::uint64_t offset = 0);

/// Applies an assignment drawn by draw_assignment. A nullopt assignment
/// returns the speech unchanged (bit-identical).
AudioBuffer apply_noise(const AudioBuffer& speech, const NoiseAssignment& assignment,
                        const NoisePool* pool, double* alpha_out = nullptr);

}  // namespace longspoof
