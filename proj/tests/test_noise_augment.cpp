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
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "longspoof/errors.hpp"
#include "longspoof/noise_augment.hpp"
#include "longspoof/synthetic.hpp"
#include "test_util.hpp"

using namespace longspoof;

namespace {

NoisePool small_pool() { return NoisePool::in_memory(make_synthetic_noise({2, 1.0, 1})); }

AudioBuffer constant_rms(double rms, std::size_t n) {
  AudioBuffer b;
  for (std::size_t i = 0; i < n; ++i) b.samples.push_back(static_cast<float>((i % 2) ? rms : -rms));
  return b;
}

// SNR implied by alpha and the fitted noise (the definition).
double defined_snr(const AudioBuffer& speech, const MixResult& m) {
  long double s = 0, n = 0;
  for (float v : speech.samples) s += static_cast<long double>(v) * v;
  for (float v : m.fitted_noise.samples) n += static_cast<long double>(v) * v;
  return 20.0 * std::log10(std::sqrt(static_cast<double>(s)) / (m.alpha * std::sqrt(static_cast<double>(n))));
}

// SNR re-measured from the float output: noise component = output - speech.
double realized_snr(const AudioBuffer& speech, const AudioBuffer& out) {
  long double s = 0, n = 0;
  for (std::size_t i = 0; i < speech.size(); ++i) {
    const long double d = static_cast<long double>(out.samples[i]) - speech.samples[i];
    s += static_cast<long double>(speech.samples[i]) * speech.samples[i];
    n += d * d;
  }
  return 10.0 * std::log10(static_cast<double>(s / n));
}

}  // namespace

TEST(NoiseCategory, WireNames) {
  EXPECT_EQ(to_string(NoiseCategory::kBabble), "babble");
  EXPECT_EQ(to_string(NoiseCategory::kMusic), "music");
  EXPECT_EQ(to_string(NoiseCategory::kNoise), "noise");
  EXPECT_EQ(parse_noise_category("music"), NoiseCategory::kMusic);
  EXPECT_THROW(parse_noise_category("Music"), Error);
}

TEST(DrawAssignment, UniformWeightsChiSquare) {
  const NoisePool pool = small_pool();
  RngStream rng = master_stream(1).derive("chi");
  const NoiseConfig cfg;
  std::array<long, 4> hist{};
  constexpr long kN = 1000000;
  for (long i = 0; i < kN; ++i) {
    const auto a = draw_assignment(rng, cfg, &pool);
    ++hist[a ? 1 + static_cast<int>(a->category) : 0];
  }
  double chi2 = 0;
  for (long h : hist) {
    EXPECT_NEAR(static_cast<double>(h) / kN, 0.25, 0.005);
    chi2 += (h - kN / 4.0) * (h - kN / 4.0) / (kN / 4.0);
  }
  EXPECT_LT(chi2, 16.27);  // 3 dof, p = 0.001
}

TEST(DrawAssignment, SnrWithinRangeAndDegenerateRange) {
  const NoisePool pool = small_pool();
  RngStream rng = master_stream(2);
  NoiseConfig cfg;
  for (int i = 0; i < 10000; ++i) {
    const auto a = draw_assignment(rng, cfg, &pool);
    if (a) {
      ASSERT_GE(a->snr_db, 0.0);
      ASSERT_LE(a->snr_db, 10.0);
      ASSERT_FALSE(a->clip_id.empty());
    }
  }
  cfg.snr_min_db = cfg.snr_max_db = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto a = draw_assignment(rng, cfg, &pool);
    if (a) ASSERT_EQ(a->snr_db, 0.0);
  }
}

TEST(DrawAssignment, CleanIsAlwaysNone) {
  RngStream rng = master_stream(3);
  const NoiseConfig cfg = NoiseConfig::clean();
  for (int i = 0; i < 10000; ++i) ASSERT_FALSE(draw_assignment(rng, cfg, nullptr).has_value());
}

TEST(DrawAssignment, EmptyCategoryThrows) {
  auto clips = make_synthetic_noise({1, 0.5, 1});
  std::erase_if(clips, [](const auto& c) { return c.first.category == NoiseCategory::kMusic; });
  const NoisePool pool = NoisePool::in_memory(clips);
  NoiseConfig cfg;
  cfg.weights = {0.0, 0.0, 1.0, 0.0};
  RngStream rng = master_stream(4);
  try {
    draw_assignment(rng, cfg, &pool);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCategory);
  }
}

TEST(DrawAssignment, RejectsBadConfig) {
  RngStream rng = master_stream(5);
  NoiseConfig cfg;
  cfg.weights = {0, 0, 0, 0};
  EXPECT_THROW(draw_assignment(rng, cfg, nullptr), Error);
  cfg = NoiseConfig{};
  cfg.snr_min_db = 5;
  cfg.snr_max_db = 1;
  EXPECT_THROW(draw_assignment(rng, cfg, nullptr), Error);
}

TEST(FitNoise, CropAtOffset) {
  AudioBuffer n;
  for (int i = 0; i < 10; ++i) n.samples.push_back(static_cast<float>(i));
  const AudioBuffer f = fit_noise_length(n, 4, 3);
  EXPECT_EQ(f.samples, (std::vector<float>{3, 4, 5, 6}));
  // Offsets wrap modulo len - target + 1 = 7.
  EXPECT_EQ(fit_noise_length(n, 4, 10).samples, f.samples);
}

TEST(FitNoise, TilesShortNoise) {
  AudioBuffer n;
  n.samples = {1, 2, 3};
  EXPECT_EQ(fit_noise_length(n, 7, 99).samples, (std::vector<float>{1, 2, 3, 1, 2, 3, 1}));
}

TEST(FitNoise, LengthContract) {
  std::mt19937_64 gen(6);
  for (int i = 0; i < 200; ++i) {
    const auto len = std::uniform_int_distribution<std::size_t>(1, 500)(gen);
    const auto target = std::uniform_int_distribution<std::size_t>(0, 1500)(gen);
    const AudioBuffer n = testutil::random_audio(gen, len);
    ASSERT_EQ(fit_noise_length(n, target, gen()).size(), target);
  }
}

TEST(Mix, EqualRmsZeroDbGivesUnitAlpha) {
  const auto s = constant_rms(0.1, 1000);
  const auto n = constant_rms(0.1, 1000);
  EXPECT_NEAR(mix_at_snr_detailed(s, n, 0.0).alpha, 1.0, 1e-9);
  EXPECT_NEAR(mix_at_snr_detailed(s, n, 10.0).alpha, std::pow(10.0, -0.5), 1e-9);
  EXPECT_NEAR(snr_gain(0.1, 0.1, 10.0), 0.316227766, 1e-9);
}

TEST(Mix, RandomMixesHitRequestedSnr) {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 200; ++i) {
    const AudioBuffer s = testutil::random_audio(gen, std::uniform_int_distribution<std::size_t>(100, 20000)(gen), 0.3);
    const AudioBuffer n = testutil::random_audio(gen, std::uniform_int_distribution<std::size_t>(50, 30000)(gen), 0.8);
    const double snr = i == 0 ? 6.7 : std::uniform_real_distribution<double>(-5, 30)(gen);
    const MixResult m = mix_at_snr_detailed(s, n, snr, gen());
    ASSERT_EQ(m.audio.size(), s.size());
    EXPECT_NEAR(defined_snr(s, m), snr, 1e-6);
    EXPECT_NEAR(realized_snr(s, m.audio), snr, 1e-3);
    // Additivity: output minus speech is the scaled fitted noise.
    const float alpha = static_cast<float>(m.alpha);
    for (std::size_t k = 0; k < s.size(); ++k) {
      const float expect = s.samples[k] + alpha * m.fitted_noise.samples[k];
      ASSERT_EQ(m.audio.samples[k], expect);
    }
  }
}

TEST(Mix, SilentNoiseThrows) {
  AudioBuffer z;
  z.samples.assign(100, 0.0f);
  try {
    mix_at_snr(constant_rms(0.1, 50), z, 5.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSilentNoise);
  }
}

TEST(ApplyNoise, NoneIsBitIdentical) {
  std::mt19937_64 gen(8);
  const AudioBuffer s = testutil::random_audio(gen, 999);
  double alpha = -1;
  EXPECT_EQ(apply_noise(s, std::nullopt, nullptr, &alpha).samples, s.samples);
  EXPECT_EQ(alpha, 0.0);
}

TEST(ApplyNoise, UsesAssignedClipAndSnr) {
  const NoisePool pool = small_pool();
  std::mt19937_64 gen(9);
  const AudioBuffer s = testutil::random_audio(gen, 5000, 0.2);
  const AppliedNoise a{NoiseCategory::kMusic, 4.0, "music_001", 12345};
  double alpha = 0;
  const AudioBuffer out = apply_noise(s, a, &pool, &alpha);
  const MixResult direct = mix_at_snr_detailed(s, *pool.audio("music_001"), 4.0, 12345);
  EXPECT_EQ(out.samples, direct.audio.samples);
  EXPECT_EQ(alpha, direct.alpha);
}

TEST(NoisePool, FromManifestResolvesRelativePaths) {
  testutil::TempDir dir;
  const auto clips = make_synthetic_noise({2, 0.5, 3});
  const auto path = write_synthetic_noise(clips, dir.path());
  const NoisePool pool = NoisePool::from_manifest(path);
  EXPECT_EQ(pool.total_clips(), 6u);
  EXPECT_EQ(pool.clips(NoiseCategory::kBabble).size(), 2u);
  const auto a = pool.audio("noise_001");
  EXPECT_EQ(a->size(), 8000u);
}

TEST(NoisePool, ManifestParseErrorNamesLine) {
  testutil::TempDir dir;
  std::ofstream(dir / "bad.jsonl") << R"({"id":"a","path":"a.wav","category":"noise"})" << "\n"
                                   << R"({"id":"b","path":"b.wav","category":"traffic"})" << "\n";
  try {
    NoisePool::from_manifest(dir / "bad.jsonl");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find(":2"), std::string::npos);
  }
}
