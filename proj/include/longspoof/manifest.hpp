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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "longspoof/labels.hpp"

namespace longspoof {

inline constexpr std::string_view kToolVersion = "0.3.0";

/// One line of a manifest. Source manifests use the first five fields;
/// generated manifests add sample extents, and window manifests also name the
/// parent long-form record.
struct ManifestEntry {
  std::string id;
  std::string path;
  std::string speaker;
  Label label = Label::kBonafide;
  Partition partition = Partition::kTrain;
  std::optional<std::string> parent;
  std::optional<std::int64_t> start_sample;
  std::optional<std::int64_t> end_sample;
  std::optional<std::int64_t> num_samples;

  bool operator==(const ManifestEntry&) const = default;
};

struct ManifestMetadata {
  std::string kind = "source";  // source | long | window
  std::uint64_t seed = 0;
  std::string config_hash;
  std::string tool_version = std::string(kToolVersion);
  int sample_rate = 16000;

  bool operator==(const ManifestMetadata&) const = default;
};

/// JSONL on disk: line 1 is {"metadata": {...}}, then one entry per line.
struct Manifest {
  ManifestMetadata metadata;
  std::vector<ManifestEntry> entries;

  bool operator==(const Manifest&) const = default;

  std::vector<ManifestEntry> in_partition(Partition partition) const;
};

std::string manifest_to_jsonl(const Manifest& manifest);

/// Parses JSONL text. Throws kParseError naming `source_name:line` and
/// kDuplicateId naming the repeated id.
Manifest manifest_from_jsonl(std::string_view text, std::string_view source_name = "<memory>");

void write_manifest(const Manifest& manifest, const std::filesystem::path& path);
Manifest read_manifest(const std::filesystem::path& path);

/// Writes to a sibling temporary file then renames it over `path`, so readers
/// never observe a partial file. Throws kIoFailure.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

std::string read_file(const std::filesystem::path& path);

/// 16 hex digits of FNV-1a over the given canonical text.
std::string hash_hex(std::string_view canonical);

}  // namespace longspoof
