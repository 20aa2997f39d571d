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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "longspoof/kernels.hpp"

using namespace longspoof::kernels;

namespace {

std::vector<float> random_floats(std::mt19937_64& gen, std::size_t n) {
  std::normal_distribution<float> d(0.0f, 0.3f);
  std::vector<float> v(n);
  for (auto& x : v) x = d(gen);
  return v;
}

class KernelEquivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    simd_ = avx2_table();
    if (simd_ == nullptr) GTEST_SKIP() << "AVX2 kernels unavailable on this build/CPU";
  }
  const KernelTable* simd_ = nullptr;
};

}  // namespace

TEST(Kernels, ActiveTableIsKnown) {
  const auto& t = active_table();
  EXPECT_TRUE(t.name == "scalar" || t.name == "avx2");
  EXPECT_EQ(scalar_table().name, "scalar");
}

TEST_F(KernelEquivalence, SumSquaresMatchesToRounding) {
  std::mt19937_64 gen(3);
  for (std::size_t n : {0u, 1u, 3u, 7u, 8u, 15u, 16u, 17u, 31u, 1000u, 4099u, 100003u}) {
    const auto x = random_floats(gen, n);
    const double a = scalar_table().sum_squares(x);
    const double b = simd_->sum_squares(x);
    EXPECT_NEAR(a, b, 1e-12 * std::max(1.0, a)) << n;
  }
}

TEST_F(KernelEquivalence, ScaleIsBitExact) {
  std::mt19937_64 gen(4);
  for (std::size_t n : {0u, 1u, 5u, 8u, 9u, 33u, 1001u}) {
    auto a = random_floats(gen, n);
    auto b = a;
    scalar_table().scale(a, 1.7371f);
    simd_->scale(b, 1.7371f);
    EXPECT_EQ(a, b) << n;
  }
}

TEST_F(KernelEquivalence, MixIsBitExact) {
  std::mt19937_64 gen(5);
  for (std::size_t n : {0u, 1u, 7u, 8u, 13u, 64u, 999u}) {
    const auto s = random_floats(gen, n);
    const auto z = random_floats(gen, n);
    std::vector<float> a(n), b(n);
    scalar_table().mix(a, s, z, 0.3162f);
    simd_->mix(b, s, z, 0.3162f);
    EXPECT_EQ(a, b) << n;
  }
}

TEST_F(KernelEquivalence, ActivityCounterIsExact) {
  std::mt19937_64 gen(6);
  std::uniform_real_distribution<double> env(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    ActivityState a;
    for (int j = 0; j < kActivityThresholds; ++j) a.threshold[j] = std::ldexp(1.0, j - 15);
    a.hangover = std::uniform_int_distribution<std::int64_t>(0, 500)(gen);
    a.last_above.fill(-(a.hangover + 1));
    ActivityState b = a;
    // Bursty envelope so thresholds switch on and off.
    for (int block = 0; block < 5; ++block) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 3000)(gen);
      std::vector<double> e(n);
      const double level = std::pow(2.0, -std::uniform_real_distribution<double>(0, 16)(gen));
      for (auto& v : e) v = level * env(gen);
      scalar_table().update_activity(a, e);
      simd_->update_activity(b, e);
      ASSERT_EQ(a.count, b.count) << trial << "/" << block;
      ASSERT_EQ(a.last_above, b.last_above);
      ASSERT_EQ(a.next_index, b.next_index);
    }
  }
}
