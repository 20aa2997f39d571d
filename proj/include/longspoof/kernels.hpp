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

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace longspoof::kernels {

/// Number of cascaded activity thresholds used by the speech level meter.
inline constexpr int kActivityThresholds = 16;

/// Running state of the per-threshold activity counter. `last_above[j]` is the
/// index of the most recent sample whose envelope reached threshold j, and
/// `count[j]` the number of samples counted active so far (envelope at or
/// above threshold, or within `hangover` samples of the last such sample).
struct ActivityState {
  alignas(32) std::array<double, kActivityThresholds> threshold{};
  alignas(32) std::array<std::int64_t, kActivityThresholds> last_above{};
  alignas(32) std::array<std::int64_t, kActivityThresholds> count{};
  std::int64_t hangover = 0;
  std::int64_t next_index = 0;
};

/// One implementation of every data-parallel inner loop. The scalar table is
/// the reference; SIMD tables must agree with it (exactly for the integer and
/// elementwise kernels, to rounding for reductions).
struct KernelTable {
  std::string_view name;

  /// Σ x[i]², accumulated in double.
  double (*sum_squares)(std::span<const float> x);

  /// x[i] *= gain.
  void (*scale)(std::span<float> x, float gain);

  /// out[i] = speech[i] + alpha * noise[i]. Multiply then add, never fused, so
  /// every table produces bit-identical output.
  void (*mix)(std::span<float> out, std::span<const float> speech, std::span<const float> noise,
              float alpha);

  /// Advances the activity counter over a block of envelope values.
  void (*update_activity)(ActivityState& state, std::span<const double> envelope);
};

const KernelTable& scalar_table();

/// Returns nullptr when the binary or CPU lacks AVX2.
const KernelTable* avx2_table();

/// Best table for this CPU. Setting LONGSPOOF_SIMD=scalar in the environment
/// forces the reference path.
const KernelTable& active_table();

}  // namespace longspoof::kernels
