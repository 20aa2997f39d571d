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

#include "longspoof/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <nlohmann/json.hpp>

#include "longspoof/errors.hpp"

namespace longspoof {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Voice {
  double f0 = 120.0;
  std::array<double, 4> harmonics{};
  double syllable_rate = 4.0;
};

Voice draw_voice(RngStream rng) {
  Voice v;
  v.f0 = rng.uniform(90.0, 260.0);
  for (auto& h : v.harmonics) h = rng.uniform(0.2, 1.0);
  v.syllable_rate = rng.uniform(3.0, 6.0);
  return v;
}

double draw_duration(const SyntheticSourceOptions& o, Label label, RngStream& rng) {
  switch (o.profile) {
    case DurationProfile::kFixed:
      return o.fixed_seconds;
    case DurationProfile::kUniform:
      return rng.uniform(o.min_seconds, o.max_seconds);
    case DurationProfile::kSourceLike: {
      const double mean = label == Label::kBonafide ? o.bonafide_mean_seconds : o.spoofed_mean_seconds;
      const double scale = std::max(mean - o.min_seconds, 1e-6);
      const double d = o.min_seconds - scale * std::log1p(-rng.uniform());
      return std::min(d, o.max_seconds);
    }
  }
  return o.fixed_seconds;
}

// Harmonic tone with a raised-cosine syllable envelope between digital
// silences. Spoofed clips get a flatter spectrum and an additive hiss.
AudioBuffer synth_clip(const Voice& voice, Label label, double seconds, double edge_seconds,
                       RngStream rng) {
  const auto n = static_cast<std::size_t>(std::llround(seconds * kSampleRate));
  const auto edge = static_cast<std::size_t>(std::llround(edge_seconds * kSampleRate));
  if (n <= 2 * edge + kSampleRate / 100) {
    throw Error(ErrorCode::kInvalidArgument, "synthetic clip too short for its silent edges");
  }
  AudioBuffer buf;
  buf.samples.assign(n, 0.0f);
  const double gain = rng.uniform(0.05, 0.6);
  const double phase = rng.uniform(0.0, kTwoPi);
  const bool spoof = label == Label::kSpoofed;
  double norm = 0.0;
  for (double h : voice.harmonics) norm += h;
  for (std::size_t i = edge; i < n - edge; ++i) {
    const double t = static_cast<double>(i - edge) / kSampleRate;
    const double env = 0.55 - 0.45 * std::cos(kTwoPi * voice.syllable_rate * t + phase);
    double s = 0.0;
    for (std::size_t k = 0; k < voice.harmonics.size(); ++k) {
      const double a = spoof ? 1.0 : voice.harmonics[k];
      s += a * std::sin(kTwoPi * voice.f0 * static_cast<double>(k + 1) * t);
    }
    s /= spoof ? static_cast<double>(voice.harmonics.size()) : norm;
    if (spoof) s += 0.1 * rng.normal();
    buf.samples[i] = static_cast<float>(gain * env * s);
  }
  return buf;
}

void peak_normalize(AudioBuffer& buf, double peak) {
  float m = 0.0f;
  for (float x : buf.samples) m = std::max(m, std::fabs(x));
  if (m <= 0.0f) return;
  const float g = static_cast<float>(peak / m);
  for (float& x : buf.samples) x *= g;
}

std::filesystem::path create_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIoFailure, "cannot create " + dir.string() + ": " + ec.message());
  return dir;
}

}  // namespace

std::string_view to_string(DurationProfile profile) {
  switch (profile) {
    case DurationProfile::kFixed: return "fixed";
    case DurationProfile::kUniform: return "uniform";
    case DurationProfile::kSourceLike: return "source-like";
  }
  return "fixed";
}

DurationProfile parse_duration_profile(std::string_view text) {
  if (text == "fixed") return DurationProfile::kFixed;
  if (text == "uniform") return DurationProfile::kUniform;
  if (text == "source-like") return DurationProfile::kSourceLike;
  throw Error(ErrorCode::kParseError, "unknown duration profile '" + std::string(text) + "'");
}

SyntheticSource make_synthetic_sources(const SyntheticSourceOptions& options) {
  if (options.speakers_per_partition == 0) {
    throw Error(ErrorCode::kInvalidArgument, "speakers_per_partition must be positive");
  }
  SyntheticSource out;
  out.manifest.metadata.kind = "source";
  out.manifest.metadata.seed = options.seed;
  const RngStream master = master_stream(options.seed).derive("synthetic-source");
  char buf[64];
  for (const auto& [partition, counts] : options.clips) {
    const auto p = static_cast<std::uint64_t>(partition);
    std::vector<Voice> voices;
    for (std::size_t s = 0; s < options.speakers_per_partition; ++s) {
      voices.push_back(draw_voice(master.derive("speaker", p * 100000 + s)));
    }
    for (Label label : {Label::kBonafide, Label::kSpoofed}) {
      const std::size_t count = label == Label::kBonafide ? counts.bonafide : counts.spoofed;
      const auto l = static_cast<std::uint64_t>(label);
      for (std::size_t i = 0; i < count; ++i) {
        RngStream rng = master.derive("clip", (p * 2 + l) << 32 | i);
        const std::size_t s = i % options.speakers_per_partition;
        std::snprintf(buf, sizeof buf, "%s_%s_%06zu", std::string(to_string(partition)).c_str(),
                      label == Label::kBonafide ? "b" : "s", i);
        ManifestEntry e;
        e.id = buf;
        e.path = "clips/" + e.id + ".wav";
        std::snprintf(buf, sizeof buf, "spk_%s_%03zu", std::string(to_string(partition)).c_str(), s);
        e.speaker = buf;
        e.label = label;
        e.partition = partition;
        const double seconds = draw_duration(options, label, rng);
        AudioBuffer audio =
            synth_clip(voices[s], label, seconds, options.edge_silence_seconds, rng.derive("audio"));
        e.num_samples = static_cast<std::int64_t>(audio.size());
        out.audio.add(e.id, std::move(audio));
        out.manifest.entries.push_back(std::move(e));
      }
    }
  }
  out.manifest.metadata.config_hash = hash_hex(manifest_to_jsonl(out.manifest));
  return out;
}

std::filesystem::path write_synthetic_sources(const SyntheticSource& source,
                                              const std::filesystem::path& out_dir) {
  create_dir(out_dir / "clips");
  for (const auto& e : source.manifest.entries) {
    save_wav(*source.audio.load(e.id), out_dir / e.path);
  }
  const auto path = out_dir / "sources.jsonl";
  write_manifest(source.manifest, path);
  return path;
}

std::vector<std::pair<NoiseClip, AudioBuffer>> make_synthetic_noise(
    const SyntheticNoiseOptions& options) {
  const auto n = static_cast<std::size_t>(std::llround(options.seconds * kSampleRate));
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "noise clips must be at least one sample");
  const RngStream master = master_stream(options.seed).derive("synthetic-noise");
  std::vector<std::pair<NoiseClip, AudioBuffer>> out;
  char id[64];
  for (NoiseCategory cat : kNoiseCategories) {
    for (std::size_t c = 0; c < options.clips_per_category; ++c) {
      RngStream rng = master.derive(to_string(cat), c);
      AudioBuffer buf;
      buf.samples.assign(n, 0.0f);
      switch (cat) {
        case NoiseCategory::kBabble:
          for (int v = 0; v < 6; ++v) {
            const Voice voice = draw_voice(rng.derive("voice", static_cast<std::uint64_t>(v)));
            const double ph = rng.uniform(0.0, kTwoPi);
            for (std::size_t i = 0; i < n; ++i) {
              const double t = static_cast<double>(i) / kSampleRate;
              const double env = 0.55 - 0.45 * std::cos(kTwoPi * voice.syllable_rate * t + ph);
              double s = 0.0;
              for (std::size_t k = 0; k < voice.harmonics.size(); ++k) {
                s += voice.harmonics[k] * std::sin(kTwoPi * voice.f0 * static_cast<double>(k + 1) * t);
              }
              buf.samples[i] += static_cast<float>(env * s);
            }
          }
          break;
        case NoiseCategory::kMusic: {
          static constexpr std::array<double, 5> kScale = {1.0, 9.0 / 8, 5.0 / 4, 3.0 / 2, 5.0 / 3};
          const double root = rng.uniform(110.0, 330.0);
          const std::size_t note_len = kSampleRate / 4;
          double freq = root;
          for (std::size_t i = 0; i < n; ++i) {
            if (i % note_len == 0) freq = root * kScale[rng.below(kScale.size())];
            const double t = static_cast<double>(i) / kSampleRate;
            const double decay = std::exp(-3.0 * static_cast<double>(i % note_len) / note_len);
            double s = 0.0;
            for (int k = 1; k <= 3; ++k) s += std::sin(kTwoPi * freq * k * t) / k;
            buf.samples[i] = static_cast<float>(decay * s);
          }
          break;
        }
        case NoiseCategory::kNoise: {
          const double a = rng.uniform(0.0, 0.9);
          double y = 0.0;
          for (std::size_t i = 0; i < n; ++i) {
            y = a * y + (1.0 - a) * rng.normal();
            buf.samples[i] = static_cast<float>(y);
          }
          break;
        }
      }
      peak_normalize(buf, 0.3);
      std::snprintf(id, sizeof id, "%s_%03zu", std::string(to_string(cat)).c_str(), c);
      NoiseClip clip{id, std::filesystem::path("noise") / (std::string(id) + ".wav"), cat};
      out.emplace_back(std::move(clip), std::move(buf));
    }
  }
  return out;
}

std::filesystem::path write_synthetic_noise(
    const std::vector<std::pair<NoiseClip, AudioBuffer>>& clips,
    const std::filesystem::path& out_dir) {
  create_dir(out_dir / "noise");
  std::string lines;
  for (const auto& [clip, audio] : clips) {
    save_wav(audio, out_dir / clip.path);
    lines += nlohmann::json{{"id", clip.id},
                            {"path", clip.path.generic_string()},
                            {"category", std::string(to_string(clip.category))}}
                 .dump();
    lines += '\n';
  }
  const auto path = out_dir / "noise_manifest.jsonl";
  write_file_atomic(path, lines);
  return path;
}

}  // namespace longspoof
