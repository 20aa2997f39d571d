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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "longspoof/longform_compose.hpp"
#include "longspoof/manifest.hpp"
#include "longspoof/resegment.hpp"

namespace longspoof {

/// Ground truth of one long-form record.
struct AnnotationRecord {
  std::string longform_id;
  Label utterance_label = Label::kBonafide;
  std::int64_t num_samples = 0;
  std::vector<SegmentAnnotation> segments;

  bool operator==(const AnnotationRecord&) const = default;

  LongFormView view() const { return LongFormView{longform_id, num_samples, segments, nullptr}; }
};

AnnotationRecord annotation_of(const LongFormRecord& record);

/// JSONL: a {"metadata": ...} line, then one record per line:
///   {"id", "label", "sample_rate", "num_samples",
///    "segments": [{"start", "end", "label", "source", "noise"}]}
/// where "start"/"end" are sample indices and "noise" is null or
/// {"category", "snr_db", "clip", "offset"}.
struct AnnotationFile {
  ManifestMetadata metadata;
  std::vector<AnnotationRecord> records;

  bool operator==(const AnnotationFile&) const = default;

  const AnnotationRecord* find(std::string_view id) const;
};

/// Returns an empty string when segments tile [0, num_samples) in order and
/// the utterance label agrees with the segment labels.
std::string check_annotation(const AnnotationRecord& record);

std::string annotations_to_jsonl(const AnnotationFile& file);
/// Throws kParseError (with line number) on malformed lines or records whose
/// segments do not tile the duration, kDuplicateId on repeated ids.
AnnotationFile annotations_from_jsonl(std::string_view text,
                                      std::string_view source_name = "<memory>");

void write_annotations(const AnnotationFile& file, const std::filesystem::path& path);
AnnotationFile read_annotations(const std::filesystem::path& path);

/// Hierarchical random streams for a generation run.
struct RngStreams {
  RngStream master;
  RngStream planning(Partition p) const { return master.derive("plan", static_cast<std::uint64_t>(p)); }
  RngStream noise(Partition p, std::size_t record) const {
    return master.derive("noise", static_cast<std::uint64_t>(p)).derive("record", record);
  }
  RngStream loudness(Partition p, std::size_t record) const {
    return master.derive("loudness", static_cast<std::uint64_t>(p)).derive("record", record);
  }
  RngStream scoring() const { return master.derive("score"); }
};

/// Derives every stream of a run from one seed. Streams depend only on the
/// seed and their derivation path, so worker count cannot change any draw.
RngStreams derive_rng_streams(std::uint64_t seed);

}  // namespace longspoof
