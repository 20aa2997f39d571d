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

#include "longspoof/resegment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "longspoof/errors.hpp"

namespace longspoof {

LongFormView view_of(const LongFormRecord& record) {
  return LongFormView{record.longform_id, static_cast<std::int64_t>(record.audio.size()),
                      record.annotations, &record.audio};
}

std::int64_t seconds_to_samples(double seconds) {
  if (!std::isfinite(seconds)) throw Error(ErrorCode::kInvalidArgument, "non-finite duration");
  const auto n = static_cast<std::int64_t>(std::llround(seconds * kSampleRate));
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "duration " + std::to_string(seconds) + " s is shorter than one sample");
  }
  return n;
}

std::string window_id(std::string_view parent_id, std::size_t index) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "_w%06zu", index);
  return std::string(parent_id) + buf;
}

Label window_label(std::span<const SegmentAnnotation> annotations, std::int64_t start_sample,
                   std::int64_t end_sample) {
  for (const auto& a : annotations) {
    if (a.label != Label::kSpoofed) continue;
    const std::int64_t overlap =
        std::min(a.end_sample, end_sample) - std::max(a.start_sample, start_sample);
    if (overlap > 0) return Label::kSpoofed;
  }
  return Label::kBonafide;
}

Label window_label_seconds(std::span<const SegmentAnnotation> annotations, double start_s,
                           double end_s) {
  return window_label(annotations, std::llround(start_s * kSampleRate),
                      std::llround(end_s * kSampleRate));
}

std::vector<WindowRecord> segment_windows(const LongFormView& record,
                                          const WindowOptions& options) {
  const std::int64_t win = seconds_to_samples(options.n_seconds);
  const std::int64_t stride = seconds_to_samples(options.stride_seconds.value_or(options.n_seconds));
  if (options.materialize_audio &&
      (record.audio == nullptr ||
       static_cast<std::int64_t>(record.audio->size()) < record.num_samples)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(record.id) + ": audio required to materialize windows");
  }

  std::vector<WindowRecord> out;
  if (record.num_samples < win) return out;
  const std::int64_t count = (record.num_samples - win) / stride + 1;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t k = 0; k < count; ++k) {
    WindowRecord w;
    w.window_id = window_id(record.id, static_cast<std::size_t>(k));
    w.parent_id = std::string(record.id);
    w.start_sample = k * stride;
    w.end_sample = w.start_sample + win;
    w.label = window_label(record.annotations, w.start_sample, w.end_sample);
    if (options.materialize_audio) {
      AudioBuffer a;
      a.sample_rate = record.audio->sample_rate;
      a.samples.assign(record.audio->samples.begin() + w.start_sample,
                       record.audio->samples.begin() + w.end_sample);
      w.audio = std::move(a);
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace longspoof
