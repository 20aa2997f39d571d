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

#include <cstddef>

#include "longspoof/kernels.hpp"

namespace longspoof::kernels {
namespace {

double sum_squares_ref(std::span<const float> x) {
  double acc = 0.0;
  for (float v : x) {
    const double d = v;
    acc += d * d;
  }
  return acc;
}

void scale_ref(std::span<float> x, float gain) {
  for (float& v : x) v *= gain;
}

void mix_ref(std::span<float> out, std::span<const float> speech, std::span<const float> noise,
             float alpha) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    const float scaled = alpha * noise[i];
    out[i] = speech[i] + scaled;
  }
}

void update_activity_ref(ActivityState& st, std::span<const double> envelope) {
  std::int64_t n = st.next_index;
  for (double q : envelope) {
    for (int j = 0; j < kActivityThresholds; ++j) {
      if (q >= st.threshold[j]) st.last_above[j] = n;
      if (n - st.last_above[j] <= st.hangover) ++st.count[j];
    }
    ++n;
  }
  st.next_index = n;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{"scalar", sum_squares_ref, scale_ref, mix_ref,
                                 update_activity_ref};
  return table;
}

}  // namespace longspoof::kernels
