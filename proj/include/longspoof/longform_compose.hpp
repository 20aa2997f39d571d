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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "longspoof/audio_cache.hpp"
#include "longspoof/audio_io.hpp"
#include "longspoof/labels.hpp"
#include "longspoof/manifest.hpp"
#include "longspoof/noise_augment.hpp"
#include "longspoof/rng.hpp"
#include "longspoof/standardize.hpp"

namespace longspoof {

enum class SpeakerMode { kMulti, kSingle };

std::string_view to_string(SpeakerMode mode);
SpeakerMode parse_speaker_mode(std::string_view text);  // "multi" | "single"

/// Segment counts per long-form record. The defaults (10 segments, 3 of them
/// bonafide in a spoofed record) are the reference recipe.
struct CompositionConfig {
  int segments_per_long = 10;
  int bonafide_in_spoofed = 3;

  int spoofed_in_spoofed() const { return segments_per_long - bonafide_in_spoofed; }
};

struct PartitionTargets {
  std::size_t bonafide = 0;
  std::size_t spoofed = 0;

  bool operator==(const PartitionTargets&) const = default;
};

/// Train 2580/22800, dev and eval 1000/1000 long-form records.
std::map<Partition, PartitionTargets> reference_targets();

struct PlanOptions {
  CompositionConfig composition;
  SpeakerMode mode = SpeakerMode::kMulti;
  NoiseConfig noise;
  double target_db_min = -33.0;
  double target_db_max = -23.0;
};

/// Everything random about one segment is decided at planning time.
struct SegmentPlan {
  std::string source_id;
  Label label = Label::kBonafide;
  double target_db = -26.0;
  NoiseAssignment noise;

  bool operator==(const SegmentPlan&) const = default;
};

struct CompositionPlan {
  std::string longform_id;
  Partition partition = Partition::kTrain;
  Label utterance_label = Label::kBonafide;
  SpeakerMode mode = SpeakerMode::kMulti;
  std::optional<std::string> speaker_id;  // set iff mode == kSingle
  std::vector<SegmentPlan> segments;

  bool operator==(const CompositionPlan&) const = default;
};

/// One contiguous region of a long-form record, in samples at 16 kHz.
struct SegmentAnnotation {
  std::int64_t start_sample = 0;
  std::int64_t end_sample = 0;  // exclusive
  Label label = Label::kBonafide;
  std::string source_id;
  NoiseAssignment noise;

  double start_s() const { return static_cast<double>(start_sample) / kSampleRate; }
  double end_s() const { return static_cast<double>(end_sample) / kSampleRate; }

  bool operator==(const SegmentAnnotation&) const = default;
};

struct LongFormRecord {
  std::string longform_id;
  Label utterance_label = Label::kBonafide;
  std::vector<SegmentAnnotation> annotations;
  AudioBuffer audio;
};

/// Per-segment intermediate results, for inspection and verification.
struct SegmentTrace {
  AudioBuffer standardized;  // after trim + loudness normalization
  TrimReport trim;
  LoudnessReport loudness;
  double noise_alpha = 0.0;  // 0 when no noise was added
};

/// Plans every record for the partitions named in `targets`, drawing source
/// segments uniformly with replacement from the partition's entries of the
/// matching label. Bonafide records hold only bonafide segments; spoofed ones
/// hold exactly `bonafide_in_spoofed` bonafide segments in shuffled order.
///
/// Randomness: the segment draws of partition p come from
/// rng.derive("plan", p); the noise and loudness draws of record i come from
/// rng.derive("noise", p).derive("record", i) and
/// rng.derive("loudness", p).derive("record", i).
///
/// Single-speaker mode picks one speaker per record among the partition's
/// speakers that own both bonafide and spoofed entries and draws every
/// segment from that speaker. Throws kInsufficientSources when a needed
/// subset is empty.
std::vector<CompositionPlan> plan_dataset(const Manifest& sources,
                                          const std::map<Partition, PartitionTargets>& targets,
                                          const PlanOptions& options, const NoisePool* pool,
                                          const RngStream& rng);

/// Checks the composition invariants; returns an empty string when they hold,
/// otherwise a description of the first violation.
std::string check_plan(const CompositionPlan& plan, const CompositionConfig& composition,
                       const Manifest* sources = nullptr);

/// Renders a plan: each segment is trimmed, normalized to its planned level,
/// mixed with its planned noise and appended. Annotation boundaries are the
/// cumulative sample counts. Errors are rethrown with the segment index.
LongFormRecord render(const CompositionPlan& plan, const AudioSource& sources,
                      const NoisePool* pool, const TrimOptions& trim = {},
                      std::vector<SegmentTrace>* trace = nullptr);

/// Spoofed iff any annotation is spoofed.
Label derive_utterance_label(std::span<const SegmentAnnotation> annotations);

/// Every long-form id: "<partition>_long_<index, 6 digits>".
std::string longform_id(Partition partition, std::size_t index);

}  // namespace longspoof
