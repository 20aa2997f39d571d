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

#include "longspoof/standardize.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "longspoof/errors.hpp"
#include "longspoof/kernels.hpp"

namespace longspoof {
namespace {

constexpr double kEnvelopeTimeConstant = 0.03;  // s
constexpr double kHangoverTime = 0.2;           // s
constexpr double kMarginDb = 15.9;
constexpr std::size_t kEnvelopeBlock = 4096;

}  // namespace

std::vector<double> frame_power(std::span<const float> x, std::size_t frame_len,
                                std::size_t hop_len) {
  if (hop_len == 0 || frame_len < hop_len) {
    throw Error(ErrorCode::kInvalidArgument, "need frame_len >= hop_len >= 1");
  }
  const auto& k = kernels::active_table();
  const auto len = static_cast<std::ptrdiff_t>(x.size());
  const auto frame = static_cast<std::ptrdiff_t>(frame_len);
  const auto hop = static_cast<std::ptrdiff_t>(hop_len);
  const std::ptrdiff_t pad = frame / 2;
  const std::ptrdiff_t padded = len + 2 * pad;
  const std::ptrdiff_t n_frames = padded >= frame ? 1 + (padded - frame) / hop : 1;

  std::vector<double> power(static_cast<std::size_t>(n_frames));
  for (std::ptrdiff_t t = 0; t < n_frames; ++t) {
    const std::ptrdiff_t begin = std::max<std::ptrdiff_t>(0, t * hop - pad);
    const std::ptrdiff_t end = std::min<std::ptrdiff_t>(len, t * hop - pad + frame);
    double energy = 0.0;
    if (end > begin) {
      energy = k.sum_squares(x.subspan(static_cast<std::size_t>(begin),
                                       static_cast<std::size_t>(end - begin)));
    }
    power[static_cast<std::size_t>(t)] = energy / static_cast<double>(frame);
  }
  return power;
}

std::pair<AudioBuffer, TrimReport> trim_silence(const AudioBuffer& buf,
                                                const TrimOptions& options) {
  if (buf.empty()) throw Error(ErrorCode::kInvalidArgument, "trim_silence on empty buffer");
  const auto power = frame_power(buf.samples, options.frame_len, options.hop_len);
  const std::size_t len = buf.size();
  const std::size_t hop = options.hop_len;

  const auto max_it = std::max_element(power.begin(), power.end());
  const double max_power = *max_it;

  std::size_t start = 0;
  std::size_t end = 0;
  if (max_power <= 0.0) {
    const auto t = static_cast<std::size_t>(max_it - power.begin());
    start = std::min(t * hop, len - 1);
    end = std::min(len, start + options.frame_len);
  } else {
    const double ref_db = 10.0 * std::log10(max_power);
    auto loud = [&](double p) { return p > 0.0 && 10.0 * std::log10(p) - ref_db > -options.top_db; };
    const auto first = static_cast<std::size_t>(
        std::find_if(power.begin(), power.end(), loud) - power.begin());
    const auto last = static_cast<std::size_t>(
        power.rend() - std::find_if(power.rbegin(), power.rend(), loud) - 1);
    start = std::min(first * hop, len - 1);
    end = std::max(std::min(len, (last + 1) * hop), start + 1);
  }

  AudioBuffer out;
  out.sample_rate = buf.sample_rate;
  out.samples.assign(buf.samples.begin() + static_cast<std::ptrdiff_t>(start),
                     buf.samples.begin() + static_cast<std::ptrdiff_t>(end));
  return {std::move(out), TrimReport{start, end, len}};
}

SpeechLevel measure_speech_level(const AudioBuffer& buf) {
  const double fs = buf.sample_rate;
  if (buf.size() < static_cast<std::size_t>(fs * 0.01)) {
    throw Error(ErrorCode::kInvalidArgument, "speech level needs at least 10 ms of audio");
  }
  const auto& k = kernels::active_table();

  kernels::ActivityState state;
  for (int j = 0; j < kernels::kActivityThresholds; ++j) {
    state.threshold[j] = std::ldexp(1.0, j - (kernels::kActivityThresholds - 1));
  }
  state.hangover = static_cast<std::int64_t>(std::floor(kHangoverTime * fs + 0.5));
  // No hangover credit before the first threshold crossing.
  state.last_above.fill(-(state.hangover + 1));

  const double g = std::exp(-1.0 / (fs * kEnvelopeTimeConstant));
  double p = 0.0;
  double q = 0.0;
  std::array<double, kEnvelopeBlock> envelope;
  const std::span<const float> x(buf.samples);
  for (std::size_t base = 0; base < x.size(); base += kEnvelopeBlock) {
    const std::size_t n = std::min(kEnvelopeBlock, x.size() - base);
    for (std::size_t i = 0; i < n; ++i) {
      p = g * p + (1.0 - g) * std::fabs(static_cast<double>(x[base + i]));
      q = g * q + (1.0 - g) * p;
      envelope[i] = q;
    }
    k.update_activity(state, std::span<const double>(envelope.data(), n));
  }

  const double energy = k.sum_squares(x);
  if (energy <= 0.0 || state.count[0] == 0) {
    throw Error(ErrorCode::kNoActivity, "no active speech found");
  }

  SpeechLevel level;
  level.long_term_level_db = 10.0 * std::log10(energy / static_cast<double>(x.size()));

  double prev_a = 0.0;
  double prev_delta = 0.0;
  double active_db = 0.0;
  bool found = false;
  int last_nonzero = 0;
  for (int j = 0; j < kernels::kActivityThresholds; ++j) {
    if (state.count[j] == 0) break;
    last_nonzero = j;
    const double a_db = 10.0 * std::log10(energy / static_cast<double>(state.count[j]));
    const double c_db = 20.0 * std::log10(state.threshold[j]);
    const double delta = a_db - c_db;
    if (delta <= kMarginDb) {
      if (j == 0) {
        active_db = a_db;
      } else {
        const double f = (prev_delta - kMarginDb) / (prev_delta - delta);
        active_db = prev_a + f * (a_db - prev_a);
      }
      found = true;
      break;
    }
    prev_a = a_db;
    prev_delta = delta;
  }
  if (!found) {
    active_db = 10.0 * std::log10(energy / static_cast<double>(state.count[last_nonzero]));
  }
  level.active_level_db = active_db;
  level.activity = std::min(1.0, energy / (static_cast<double>(x.size()) * std::pow(10.0, active_db / 10.0)));
  return level;
}

double active_speech_level(const AudioBuffer& buf) {
  return measure_speech_level(buf).active_level_db;
}

std::pair<AudioBuffer, LoudnessReport> normalize_loudness(const AudioBuffer& buf,
                                                          double target_db) {
  LoudnessReport report;
  report.active_level_db = active_speech_level(buf);
  report.target_db = target_db;
  report.gain_linear = std::pow(10.0, (target_db - report.active_level_db) / 20.0);

  AudioBuffer out = buf;
  kernels::active_table().scale(out.samples, static_cast<float>(report.gain_linear));
  report.clipping_risk =
      std::any_of(out.samples.begin(), out.samples.end(), [](float v) { return std::fabs(v) > 1.0f; });
  return {std::move(out), report};
}

AudioBuffer standardize(const AudioBuffer& buf, double target_db, const TrimOptions& trim,
                        LoudnessReport* report) {
  auto [trimmed, trim_report] = trim_silence(buf, trim);
  auto [normalized, loudness] = normalize_loudness(trimmed, target_db);
  if (report != nullptr) *report = loudness;
  return std::move(normalized);
}

}  // namespace longspoof
