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
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "longspoof/longform_compose.hpp"
#include "longspoof/manifest.hpp"
#include "longspoof/protocol.hpp"
#include "longspoof/resegment.hpp"

namespace longspoof {

struct GenerateOptions {
  std::uint64_t seed = 0;
  PlanOptions plan;
  TrimOptions trim;
  std::map<Partition, PartitionTargets> targets = reference_targets();
  unsigned jobs = 1;
};

/// Canonical text of everything that determines the generated dataset.
/// Thread count is deliberately absent.
std::string generation_config_text(const GenerateOptions& options, const Manifest& sources,
                                   const NoisePool* pool);

/// The plans generate_dataset renders for these inputs.
std::vector<CompositionPlan> plan_generation(const Manifest& sources, const NoisePool* pool,
                                             const GenerateOptions& options);

/// Renders plans on `jobs` worker threads and hands each finished record to
/// `sink` together with its plan index. The sink may be called concurrently
/// from several threads, in any order. The first exception thrown by a render
/// or by the sink stops the remaining work and is rethrown.
void render_all(const std::vector<CompositionPlan>& plans, const AudioSource& sources,
                const NoisePool* pool, const TrimOptions& trim, unsigned jobs,
                const std::function<void(std::size_t, LongFormRecord&&)>& sink);

struct GeneratedDataset {
  Manifest manifest;         // kind "long", one entry per record, plan order
  AnnotationFile annotations;
};

/// Plans, renders and writes a dataset:
///   <out>/long_manifest.jsonl, <out>/annotations.jsonl,
///   <out>/generation.json and <out>/audio/<id>.wav.
/// Every file is a pure function of (sources, options minus jobs, pool).
GeneratedDataset generate_dataset(const Manifest& sources, const AudioSource& audio,
                                  const NoisePool* pool, const GenerateOptions& options,
                                  const std::filesystem::path& out_dir);

/// Window manifest for a generated dataset. Each entry carries its parent id
/// and sample extent and inherits partition and speaker from the parent.
/// Paths are "windows/<id>.wav" when audio is materialized, empty otherwise.
Manifest window_manifest(const Manifest& long_manifest, const AnnotationFile& annotations,
                         const WindowOptions& options);

/// Reads <long_dir>/long_manifest.jsonl and annotations.jsonl (or the given
/// paths), writes <out>/window_manifest.jsonl and, when materializing, the
/// window WAVs cut from the parent audio.
Manifest resegment_dataset(const std::filesystem::path& long_manifest_path,
                           const std::filesystem::path& annotations_path,
                           const WindowOptions& options, const std::filesystem::path& out_dir,
                           unsigned jobs = 1);

}  // namespace longspoof
