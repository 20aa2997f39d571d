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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "longspoof/manifest.hpp"
#include "longspoof/rng.hpp"

namespace longspoof {

/// Higher scores mean "more bonafide" throughout the project.
struct TrialScore {
  std::string trial_id;
  double score = 0.0;

  bool operator==(const TrialScore&) const = default;
};

/// Contents of a score file: "trial_id<TAB>score" per line. An optional
/// "#config_hash<TAB><hex>" line ties the file to the manifest it scores;
/// other lines starting with '#' are comments.
struct ScoreFile {
  std::vector<TrialScore> scores;
  std::optional<std::string> config_hash;

  bool operator==(const ScoreFile&) const = default;
};

/// Throws kParseError (with line number) for malformed lines or non-finite
/// scores and kDuplicateTrial for repeated ids.
ScoreFile parse_scores(std::string_view text, std::string_view source_name = "<memory>");
std::string format_scores(const ScoreFile& file);

ScoreFile read_scores(const std::filesystem::path& path);
void write_scores(const ScoreFile& file, const std::filesystem::path& path);

/// score = 1{bonafide} + N(0, sigma²), one draw per entry in manifest order.
std::vector<TrialScore> oracle_scorer(const Manifest& manifest, double sigma, RngStream rng);

/// Same score for every trial.
std::vector<TrialScore> constant_scorer(const Manifest& manifest, double value);

/// Uniform [0, 1) scores that ignore labels.
std::vector<TrialScore> random_scorer(const Manifest& manifest, RngStream rng);

}  // namespace longspoof
