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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "longspoof/audio_io.hpp"
#include "longspoof/labels.hpp"
#include "longspoof/longform_compose.hpp"

namespace longspoof {

struct WindowRecord {
  std::string window_id;  // "<parent>_w<index, 6 digits>"
  std::string parent_id;
  std::int64_t start_sample = 0;
  std::int64_t end_sample = 0;
  Label label = Label::kBonafide;
  std::optional<AudioBuffer> audio;

  double start_s() const { return static_cast<double>(start_sample) / kSampleRate; }
  double end_s() const { return static_cast<double>(end_sample) / kSampleRate; }
};

struct WindowOptions {
  double n_seconds = 4.0;
  std::optional<double> stride_seconds;  // defaults to n_seconds (no overlap)
  bool materialize_audio = false;
};

/// What segment_windows needs from a long-form record.
struct LongFormView {
  std::string_view id;
  std::int64_t num_samples = 0;
  std::span<const SegmentAnnotation> annotations;
  const AudioBuffer* audio = nullptr;  // required only to materialize windows
};

LongFormView view_of(const LongFormRecord& record);

/// Seconds to a whole number of samples (rounded). Throws kInvalidArgument
/// for durations under one sample.
std::int64_t seconds_to_samples(double seconds);

/// Cuts floor((len - N) / stride) + 1 windows of exactly N seconds at offsets
/// 0, stride, 2*stride, ...; trailing audio shorter than a window is dropped.
std::vector<WindowRecord> segment_windows(const LongFormView& record,
                                          const WindowOptions& options = {});

/// Spoofed iff some spoofed annotation overlaps [start, end) by at least one
/// sample; touching at a boundary does not count.
Label window_label(std::span<const SegmentAnnotation> annotations, std::int64_t start_sample,
                   std::int64_t end_sample);

/// Same, with bounds in seconds (rounded to samples).
Label window_label_seconds(std::span<const SegmentAnnotation> annotations, double start_s,
                           double end_s);

std::string window_id(std::string_view parent_id, std::size_t index);

}  // namespace longspoof
