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

#include "longspoof/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "longspoof/errors.hpp"

namespace longspoof {
namespace {

using nlohmann::json;

json config_json(const GenerateOptions& o, const Manifest& sources, const NoisePool* pool) {
  json targets = json::object();
  for (const auto& [p, t] : o.targets) {
    targets[std::string(to_string(p))] = json{{"bonafide", t.bonafide}, {"spoofed", t.spoofed}};
  }
  json noise_clips = json::array();
  if (pool != nullptr) {
    for (NoiseCategory c : kNoiseCategories) {
      for (const auto& clip : pool->clips(c)) {
        noise_clips.push_back(json{{"id", clip.id}, {"category", std::string(to_string(c))}});
      }
    }
  }
  const auto& n = o.plan.noise;
  return json{
      {"seed", o.seed},
      {"mode", std::string(to_string(o.plan.mode))},
      {"segments_per_long", o.plan.composition.segments_per_long},
      {"bonafide_in_spoofed", o.plan.composition.bonafide_in_spoofed},
      {"target_db_min", o.plan.target_db_min},
      {"target_db_max", o.plan.target_db_max},
      {"noise", json{{"snr_min_db", n.snr_min_db},
                     {"snr_max_db", n.snr_max_db},
                     {"weights", n.weights},
                     {"clips", noise_clips}}},
      {"trim", json{{"top_db", o.trim.top_db},
                    {"frame_len", o.trim.frame_len},
                    {"hop_len", o.trim.hop_len}}},
      {"targets", targets},
      {"sources_hash", hash_hex(manifest_to_jsonl(sources))},
      {"tool_version", std::string(kToolVersion)},
  };
}

std::filesystem::path audio_relpath(const std::string& id) {
  return std::filesystem::path("audio") / (id + ".wav");
}

}  // namespace

std::string generation_config_text(const GenerateOptions& options, const Manifest& sources,
                                   const NoisePool* pool) {
  return config_json(options, sources, pool).dump();
}

std::vector<CompositionPlan> plan_generation(const Manifest& sources, const NoisePool* pool,
                                             const GenerateOptions& options) {
  return plan_dataset(sources, options.targets, options.plan, pool, master_stream(options.seed));
}

void render_all(const std::vector<CompositionPlan>& plans, const AudioSource& sources,
                const NoisePool* pool, const TrimOptions& trim, unsigned jobs,
                const std::function<void(std::size_t, LongFormRecord&&)>& sink) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mu;

  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= plans.size()) return;
      try {
        sink(i, render(plans[i], sources, pool, trim));
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        failed = true;
      }
    }
  };

  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(plans.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(n);
    for (unsigned t = 0; t < n; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
}

GeneratedDataset generate_dataset(const Manifest& sources, const AudioSource& audio,
                                  const NoisePool* pool, const GenerateOptions& options,
                                  const std::filesystem::path& out_dir) {
  const json config = config_json(options, sources, pool);
  const std::string config_hash = hash_hex(config.dump());

  const auto plans = plan_generation(sources, pool, options);

  std::error_code ec;
  std::filesystem::create_directories(out_dir / "audio", ec);
  if (ec) throw Error(ErrorCode::kIoFailure, "cannot create " + (out_dir / "audio").string() + ": " + ec.message());

  std::vector<AnnotationRecord> records(plans.size());
  render_all(plans, audio, pool, options.trim, options.jobs,
             [&](std::size_t i, LongFormRecord&& rec) {
               save_wav(rec.audio, out_dir / audio_relpath(rec.longform_id));
               records[i] = annotation_of(rec);
             });

  GeneratedDataset out;
  out.manifest.metadata = ManifestMetadata{"long", options.seed, config_hash,
                                           std::string(kToolVersion), kSampleRate};
  out.annotations.metadata = out.manifest.metadata;
  out.annotations.metadata.kind = "annotation";
  out.manifest.entries.reserve(plans.size());
  for (std::size_t i = 0; i < plans.size(); ++i) {
    ManifestEntry e;
    e.id = plans[i].longform_id;
    e.path = audio_relpath(e.id).generic_string();
    e.speaker = plans[i].speaker_id.value_or("");
    e.label = plans[i].utterance_label;
    e.partition = plans[i].partition;
    e.num_samples = records[i].num_samples;
    out.manifest.entries.push_back(std::move(e));
  }
  out.annotations.records = std::move(records);

  write_annotations(out.annotations, out_dir / "annotations.jsonl");
  write_manifest(out.manifest, out_dir / "long_manifest.jsonl");
  json gen = config;
  gen["config_hash"] = config_hash;
  write_file_atomic(out_dir / "generation.json", gen.dump(2) + "\n");
  return out;
}

Manifest window_manifest(const Manifest& long_manifest, const AnnotationFile& annotations,
                         const WindowOptions& options) {
  std::unordered_map<std::string_view, const ManifestEntry*> parent_of;
  for (const auto& e : long_manifest.entries) parent_of.emplace(e.id, &e);

  Manifest out;
  out.metadata = long_manifest.metadata;
  out.metadata.kind = "window";
  json key{{"parent_hash", long_manifest.metadata.config_hash},
           {"n_seconds", options.n_seconds},
           {"stride_seconds", options.stride_seconds.value_or(options.n_seconds)}};
  out.metadata.config_hash = hash_hex(key.dump());

  WindowOptions labels_only = options;
  labels_only.materialize_audio = false;
  for (const auto& rec : annotations.records) {
    auto it = parent_of.find(rec.longform_id);
    if (it == parent_of.end()) {
      throw Error(ErrorCode::kUnknownTrial,
                  "annotated record '" + rec.longform_id + "' is not in the long manifest");
    }
    const ManifestEntry& parent = *it->second;
    for (auto& w : segment_windows(rec.view(), labels_only)) {
      ManifestEntry e;
      e.id = w.window_id;
      if (options.materialize_audio) {
        e.path = (std::filesystem::path("windows") / (w.window_id + ".wav")).generic_string();
      }
      e.speaker = parent.speaker;
      e.label = w.label;
      e.partition = parent.partition;
      e.parent = w.parent_id;
      e.start_sample = w.start_sample;
      e.end_sample = w.end_sample;
      e.num_samples = w.end_sample - w.start_sample;
      out.entries.push_back(std::move(e));
    }
  }
  return out;
}

Manifest resegment_dataset(const std::filesystem::path& long_manifest_path,
                           const std::filesystem::path& annotations_path,
                           const WindowOptions& options, const std::filesystem::path& out_dir,
                           unsigned jobs) {
  const Manifest longs = read_manifest(long_manifest_path);
  const AnnotationFile annotations = read_annotations(annotations_path);
  Manifest windows = window_manifest(longs, annotations, options);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::kIoFailure, "cannot create " + out_dir.string() + ": " + ec.message());

  if (options.materialize_audio) {
    std::filesystem::create_directories(out_dir / "windows", ec);
    if (ec) throw Error(ErrorCode::kIoFailure, "cannot create windows directory: " + ec.message());
    const auto long_dir = long_manifest_path.parent_path();
    // Windows are contiguous per parent in manifest order.
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = 0; i < windows.entries.size();) {
      std::size_t j = i;
      while (j < windows.entries.size() && windows.entries[j].parent == windows.entries[i].parent) ++j;
      groups.emplace_back(i, j);
      i = j;
    }
    std::unordered_map<std::string_view, const ManifestEntry*> parent_of;
    for (const auto& e : longs.entries) parent_of.emplace(e.id, &e);

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex mu;
    auto worker = [&] {
      for (std::size_t g = next.fetch_add(1); g < groups.size(); g = next.fetch_add(1)) {
        try {
          const auto [lo, hi] = groups[g];
          const ManifestEntry& parent = *parent_of.at(*windows.entries[lo].parent);
          std::filesystem::path src = parent.path;
          if (src.is_relative()) src = long_dir / src;
          const AudioBuffer audio = load_wav(src);
          for (std::size_t k = lo; k < hi; ++k) {
            const auto& w = windows.entries[k];
            if (*w.end_sample > static_cast<std::int64_t>(audio.size())) {
              throw Error(ErrorCode::kParseError, "window " + w.id + " exceeds parent audio");
            }
            AudioBuffer slice;
            slice.samples.assign(audio.samples.begin() + *w.start_sample,
                                 audio.samples.begin() + *w.end_sample);
            save_wav(slice, out_dir / w.path);
          }
        } catch (...) {
          std::lock_guard lock(mu);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(groups.size())));
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < n; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  write_manifest(windows, out_dir / "window_manifest.jsonl");
  return windows;
}

}  // namespace longspoof
