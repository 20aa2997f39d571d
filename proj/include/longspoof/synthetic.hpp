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

// Labeled stand-in corpora: harmonic "speech" clips framed by digital
// silence, plus babble/music/noise clips, so the whole pipeline runs without
// licensed audio.

#include <cstdint>
#include <filesystem>
#include <map>
#include <utility>
#include <vector>

#include "longspoof/audio_cache.hpp"
#include "longspoof/longform_compose.hpp"
#include "longspoof/manifest.hpp"
#include "longspoof/noise_augment.hpp"

namespace longspoof {

enum class DurationProfile {
  kFixed,        // every clip lasts fixed_seconds
  kUniform,      // U[min_seconds, max_seconds]
  kSourceLike,   // min + Exp(mean - min), clipped to max; per-label means
};

std::string_view to_string(DurationProfile profile);
DurationProfile parse_duration_profile(std::string_view text);  // fixed | uniform | source-like

struct SyntheticSourceOptions {
  /// Number of source clips per partition and label.
  std::map<Partition, PartitionTargets> clips = {{Partition::kTrain, {40, 40}},
                                                 {Partition::kDev, {20, 20}},
                                                 {Partition::kEval, {20, 20}}};
  std::size_t speakers_per_partition = 8;
  DurationProfile profile = DurationProfile::kFixed;
  double fixed_seconds = 1.0;
  double min_seconds = 2.0;
  double max_seconds = 10.0;
  // Source-like means: with 2-10 s clips these reproduce the reference SEG-4
  // train window counts to within a few percent.
  double bonafide_mean_seconds = 2.4;
  double spoofed_mean_seconds = 2.65;
  double edge_silence_seconds = 0.1;  // zeros before and after the tone
  std::uint64_t seed = 0;
};

struct SyntheticSource {
  Manifest manifest;  // paths are "clips/<id>.wav"
  InMemoryAudioSource audio;
};

/// Speakers are assigned round-robin within a partition, so every speaker owns
/// both labels whenever each label has at least speakers_per_partition clips.
SyntheticSource make_synthetic_sources(const SyntheticSourceOptions& options);

/// Writes <out>/sources.jsonl and the clip WAVs; returns the manifest path.
std::filesystem::path write_synthetic_sources(const SyntheticSource& source,
                                              const std::filesystem::path& out_dir);

struct SyntheticNoiseOptions {
  std::size_t clips_per_category = 4;
  double seconds = 3.0;
  std::uint64_t seed = 0;
};

std::vector<std::pair<NoiseClip, AudioBuffer>> make_synthetic_noise(
    const SyntheticNoiseOptions& options);

/// Writes <out>/noise_manifest.jsonl and the clip WAVs; returns the manifest path.
std::filesystem::path write_synthetic_noise(
    const std::vector<std::pair<NoiseClip, AudioBuffer>>& clips,
    const std::filesystem::path& out_dir);

}  // namespace longspoof
