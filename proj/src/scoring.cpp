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

#include "longspoof/scoring.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <unordered_set>

#include "longspoof/errors.hpp"

namespace longspoof {
namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  return s;
}

}  // namespace

ScoreFile parse_scores(std::string_view text, std::string_view source_name) {
  ScoreFile file;
  std::unordered_set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = strip(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty()) continue;
    const std::string where = std::string(source_name) + ":" + std::to_string(line_no);
    const std::size_t tab = line.find('\t');
    if (line.front() == '#') {
      if (tab != std::string_view::npos && line.substr(0, tab) == "#config_hash") {
        file.config_hash = std::string(line.substr(tab + 1));
      }
      continue;
    }
    if (tab == std::string_view::npos || tab == 0) {
      throw Error(ErrorCode::kParseError, where + ": expected 'trial_id<TAB>score'");
    }
    const std::string_view id = line.substr(0, tab);
    const std::string_view value = line.substr(tab + 1);
    double score = 0.0;
    const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), score);
    if (ec != std::errc() || end != value.data() + value.size() || !std::isfinite(score)) {
      throw Error(ErrorCode::kParseError,
                  where + ": score '" + std::string(value) + "' is not a finite number");
    }
    if (!seen.emplace(id).second) {
      throw Error(ErrorCode::kDuplicateTrial, where + ": trial '" + std::string(id) + "'");
    }
    file.scores.push_back(TrialScore{std::string(id), score});
  }
  return file;
}

std::string format_scores(const ScoreFile& file) {
  std::string out;
  if (file.config_hash) out += "#config_hash\t" + *file.config_hash + "\n";
  char buf[64];
  for (const auto& s : file.scores) {
    // Shortest representation that round-trips.
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, s.score);
    out += s.trial_id;
    out += '\t';
    out.append(buf, end);
    out += '\n';
  }
  return out;
}

ScoreFile read_scores(const std::filesystem::path& path) {
  return parse_scores(read_file(path), path.string());
}

void write_scores(const ScoreFile& file, const std::filesystem::path& path) {
  write_file_atomic(path, format_scores(file));
}

std::vector<TrialScore> oracle_scorer(const Manifest& manifest, double sigma, RngStream rng) {
  if (!(sigma >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "sigma must be non-negative");
  std::vector<TrialScore> out;
  out.reserve(manifest.entries.size());
  for (const auto& e : manifest.entries) {
    const double base = e.label == Label::kBonafide ? 1.0 : 0.0;
    const double noise = sigma > 0.0 ? sigma * rng.normal() : 0.0;
    out.push_back(TrialScore{e.id, base + noise});
  }
  return out;
}

std::vector<TrialScore> constant_scorer(const Manifest& manifest, double value) {
  std::vector<TrialScore> out;
  out.reserve(manifest.entries.size());
  for (const auto& e : manifest.entries) out.push_back(TrialScore{e.id, value});
  return out;
}

std::vector<TrialScore> random_scorer(const Manifest& manifest, RngStream rng) {
  std::vector<TrialScore> out;
  out.reserve(manifest.entries.size());
  for (const auto& e : manifest.entries) out.push_back(TrialScore{e.id, rng.uniform()});
  return out;
}

}  // namespace longspoof
