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

#include "longspoof/noise_augment.hpp"

#include <cmath>
#include <fstream>
#include <numeric>

#include <nlohmann/json.hpp>

#include "longspoof/dsp.hpp"
#include "longspoof/errors.hpp"
#include "longspoof/kernels.hpp"

namespace longspoof {

std::string_view to_string(NoiseCategory category) {
  switch (category) {
    case NoiseCategory::kBabble: return "babble";
    case NoiseCategory::kMusic: return "music";
    case NoiseCategory::kNoise: return "noise";
  }
  return "noise";
}

NoiseCategory parse_noise_category(std::string_view text) {
  if (text == "babble") return NoiseCategory::kBabble;
  if (text == "music") return NoiseCategory::kMusic;
  if (text == "noise") return NoiseCategory::kNoise;
  throw Error(ErrorCode::kParseError, "unknown noise category '" + std::string(text) + "'");
}

NoisePool::NoisePool(std::vector<NoiseClip> clips, std::filesystem::path root,
                     std::size_t cache_bytes)
    : root_(std::move(root)), cache_(std::make_shared<AudioCache>(cache_bytes)) {
  for (auto& clip : clips) {
    if (!by_id_.emplace(clip.id, clip).second) {
      throw Error(ErrorCode::kDuplicateId, "noise clip id '" + clip.id + "'");
    }
    by_category_[static_cast<std::size_t>(clip.category)].push_back(std::move(clip));
  }
}

NoisePool NoisePool::in_memory(std::vector<std::pair<NoiseClip, AudioBuffer>> clips) {
  std::vector<NoiseClip> meta;
  meta.reserve(clips.size());
  for (const auto& [clip, audio] : clips) meta.push_back(clip);
  NoisePool pool(std::move(meta), {}, 0);
  for (auto& [clip, audio] : clips) {
    pool.resident_[clip.id] = std::make_shared<const AudioBuffer>(std::move(audio));
  }
  return pool;
}

NoisePool NoisePool::from_manifest(const std::filesystem::path& manifest,
                                   std::optional<std::filesystem::path> root) {
  std::ifstream in(manifest);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open noise manifest " + manifest.string());
  std::vector<NoiseClip> clips;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      NoiseClip clip;
      clip.id = j.at("id").get<std::string>();
      clip.path = j.at("path").get<std::string>();
      clip.category = parse_noise_category(j.at("category").get<std::string>());
      clips.push_back(std::move(clip));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParseError,
                  manifest.string() + ":" + std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      throw Error(e.code(), manifest.string() + ":" + std::to_string(line_no) + ": " + e.detail());
    }
  }
  return NoisePool(std::move(clips), root.value_or(manifest.parent_path()));
}

const std::vector<NoiseClip>& NoisePool::clips(NoiseCategory category) const {
  return by_category_[static_cast<std::size_t>(category)];
}

std::size_t NoisePool::total_clips() const { return by_id_.size(); }

std::shared_ptr<const AudioBuffer> NoisePool::audio(const std::string& clip_id) const {
  if (auto it = resident_.find(clip_id); it != resident_.end()) return it->second;
  auto it = by_id_.find(clip_id);
  if (it == by_id_.end()) throw Error(ErrorCode::kIoFailure, "unknown noise clip '" + clip_id + "'");
  const auto& path = it->second.path;
  return cache_->load(path.is_absolute() ? path : root_ / path);
}

NoiseAssignment draw_assignment(RngStream& rng, const NoiseConfig& config,
                                const NoisePool* pool) {
  double total = 0.0;
  for (double w : config.weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::kInvalidArgument, "noise weights must be finite and non-negative");
    }
    total += w;
  }
  if (total <= 0.0) throw Error(ErrorCode::kInvalidArgument, "noise weights sum to zero");
  if (!(config.snr_min_db <= config.snr_max_db)) {
    throw Error(ErrorCode::kInvalidArgument, "snr_min must not exceed snr_max");
  }

  const double u = rng.uniform() * total;
  std::size_t outcome = 0;
  double acc = 0.0;
  for (std::size_t i = 0; i < config.weights.size(); ++i) {
    if (config.weights[i] <= 0.0) continue;
    acc += config.weights[i];
    outcome = i;
    if (u < acc) break;
  }
  if (outcome == 0) return std::nullopt;

  const NoiseCategory category = kNoiseCategories[outcome - 1];
  if (pool == nullptr || pool->clips(category).empty()) {
    throw Error(ErrorCode::kEmptyCategory,
                "noise category '" + std::string(to_string(category)) + "' has no clips");
  }
  const auto& clips = pool->clips(category);
  AppliedNoise applied;
  applied.category = category;
  applied.snr_db = rng.uniform(config.snr_min_db, config.snr_max_db);
  applied.clip_id = clips[static_cast<std::size_t>(rng.below(clips.size()))].id;
  applied.offset = rng.next_u64();
  return applied;
}

AudioBuffer fit_noise_length(const AudioBuffer& noise, std::size_t target_len,
                             std::uint64_t offset) {
  if (noise.empty()) throw Error(ErrorCode::kInvalidArgument, "cannot fit empty noise");
  AudioBuffer out;
  out.sample_rate = noise.sample_rate;
  out.samples.resize(target_len);
  const std::size_t len = noise.size();
  if (len >= target_len) {
    const std::size_t start = static_cast<std::size_t>(offset % (len - target_len + 1));
    std::copy_n(noise.samples.begin() + static_cast<std::ptrdiff_t>(start), target_len,
                out.samples.begin());
  } else {
    for (std::size_t i = 0; i < target_len; i += len) {
      const std::size_t n = std::min(len, target_len - i);
      std::copy_n(noise.samples.begin(), n, out.samples.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  return out;
}

double snr_gain(double rms_speech, double rms_noise, double snr_db) {
  return (rms_speech / rms_noise) * std::pow(10.0, -snr_db / 20.0);
}

MixResult mix_at_snr_detailed(const AudioBuffer& speech, const AudioBuffer& noise, double snr_db,
                              std::uint64_t offset) {
  if (speech.empty()) throw Error(ErrorCode::kInvalidArgument, "cannot mix into empty speech");
  MixResult r;
  r.fitted_noise = fit_noise_length(noise, speech.size(), offset);
  const double noise_rms = rms(r.fitted_noise.samples);
  if (!(noise_rms > 0.0)) throw Error(ErrorCode::kSilentNoise, "noise has zero RMS over the segment");
  r.alpha = snr_gain(rms(speech.samples), noise_rms, snr_db);
  r.audio.sample_rate = speech.sample_rate;
  r.audio.samples.resize(speech.size());
  kernels::active_table().mix(r.audio.samples, speech.samples, r.fitted_noise.samples,
                              static_cast<float>(r.alpha));
  return r;
}

AudioBuffer mix_at_snr(const AudioBuffer& speech, const AudioBuffer& noise, double snr_db,
                       std::uint64_t offset) {
  return std::move(mix_at_snr_detailed(speech, noise, snr_db, offset).audio);
}

AudioBuffer apply_noise(const AudioBuffer& speech, const NoiseAssignment& assignment,
                        const NoisePool* pool, double* alpha_out) {
  if (!assignment) {
    if (alpha_out != nullptr) *alpha_out = 0.0;
    return speech;
  }
  if (pool == nullptr) throw Error(ErrorCode::kEmptyCategory, "noise assigned but no pool given");
  const auto noise = pool->audio(assignment->clip_id);
  auto r = mix_at_snr_detailed(speech, *noise, assignment->snr_db, assignment->offset);
  if (alpha_out != nullptr) *alpha_out = r.alpha;
  return std::move(r.audio);
}

}  // namespace longspoof
