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

// Built with -mavx2 only when the compiler targets x86-64; the dispatcher
// checks the CPU before handing this table out.

#include <cstddef>

#include "longspoof/kernels.hpp"

#if defined(LONGSPOOF_HAVE_AVX2)

#include <immintrin.h>

namespace longspoof::kernels {
namespace {

double sum_squares_avx2(std::span<const float> x) {
  const float* p = x.data();
  const std::size_t n = x.size();
  const std::size_t n8 = n / 8 * 8;
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n8; i += 8) {
    const __m256 v = _mm256_loadu_ps(p + i);
    const __m256d lo = _mm256_cvtps_pd(_mm256_castps256_ps128(v));
    const __m256d hi = _mm256_cvtps_pd(_mm256_extractf128_ps(v, 1));
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(lo, lo));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(hi, hi));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double acc = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (std::size_t i = n8; i < n; ++i) {
    const double d = p[i];
    acc += d * d;
  }
  return acc;
}

void scale_avx2(std::span<float> x, float gain) {
  float* p = x.data();
  const std::size_t n = x.size();
  const std::size_t n8 = n / 8 * 8;
  const __m256 g = _mm256_set1_ps(gain);
  for (std::size_t i = 0; i < n8; i += 8) {
    _mm256_storeu_ps(p + i, _mm256_mul_ps(_mm256_loadu_ps(p + i), g));
  }
  for (std::size_t i = n8; i < n; ++i) p[i] *= gain;
}

void mix_avx2(std::span<float> out, std::span<const float> speech, std::span<const float> noise,
              float alpha) {
  const std::size_t n = out.size();
  const std::size_t n8 = n / 8 * 8;
  const __m256 a = _mm256_set1_ps(alpha);
  for (std::size_t i = 0; i < n8; i += 8) {
    const __m256 scaled = _mm256_mul_ps(a, _mm256_loadu_ps(noise.data() + i));
    _mm256_storeu_ps(out.data() + i, _mm256_add_ps(_mm256_loadu_ps(speech.data() + i), scaled));
  }
  for (std::size_t i = n8; i < n; ++i) {
    const float scaled = alpha * noise[i];
    out[i] = speech[i] + scaled;
  }
}

// The 16 thresholds live in four 4-lane double vectors; the last-above index
// and the count for each threshold sit in matching 4-lane int64 vectors.
void update_activity_avx2(ActivityState& st, std::span<const double> envelope) {
  constexpr int kVecs = kActivityThresholds / 4;
  __m256d thr[kVecs];
  __m256i last[kVecs];
  __m256i count[kVecs];
  for (int k = 0; k < kVecs; ++k) {
    thr[k] = _mm256_load_pd(st.threshold.data() + 4 * k);
    last[k] = _mm256_load_si256(reinterpret_cast<const __m256i*>(st.last_above.data() + 4 * k));
    count[k] = _mm256_load_si256(reinterpret_cast<const __m256i*>(st.count.data() + 4 * k));
  }
  const __m256i hang_plus_one = _mm256_set1_epi64x(st.hangover + 1);
  std::int64_t n = st.next_index;
  for (double q : envelope) {
    const __m256d qv = _mm256_set1_pd(q);
    const __m256i nv = _mm256_set1_epi64x(n);
    for (int k = 0; k < kVecs; ++k) {
      const __m256i above = _mm256_castpd_si256(_mm256_cmp_pd(qv, thr[k], _CMP_GE_OQ));
      last[k] = _mm256_blendv_epi8(last[k], nv, above);
      const __m256i since = _mm256_sub_epi64(nv, last[k]);
      const __m256i active = _mm256_cmpgt_epi64(hang_plus_one, since);
      count[k] = _mm256_sub_epi64(count[k], active);
    }
    ++n;
  }
  for (int k = 0; k < kVecs; ++k) {
    _mm256_store_si256(reinterpret_cast<__m256i*>(st.last_above.data() + 4 * k), last[k]);
    _mm256_store_si256(reinterpret_cast<__m256i*>(st.count.data() + 4 * k), count[k]);
  }
  st.next_index = n;
}

}  // namespace

const KernelTable* avx2_table_impl() {
  static const KernelTable table{"avx2", sum_squares_avx2, scale_avx2, mix_avx2,
                                 update_activity_avx2};
  return &table;
}

}  // namespace longspoof::kernels

#else

namespace longspoof::kernels {
const KernelTable* avx2_table_impl() { return nullptr; }
}  // namespace longspoof::kernels

#endif
