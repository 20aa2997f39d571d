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

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "longspoof/errors.hpp"
#include "longspoof/metrics.hpp"
#include "longspoof/protocol.hpp"
#include "longspoof/scoring.hpp"
#include "test_util.hpp"

using namespace longspoof;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "longspoof");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Sources and noise written once per test binary.
class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new testutil::TempDir();
    ASSERT_EQ(run({"make-synthetic-source", "--out", src(), "--seed", "1", "--train", "6,6", "--dev", "4,4",
                   "--eval", "4,4", "--speakers", "3"}).code, 0);
    ASSERT_EQ(run({"make-synthetic-noise", "--out", noise(), "--clips-per-category", "2", "--seconds", "1"}).code, 0);
  }
  static void TearDownTestSuite() { delete dir_; }

  static std::string src() { return (dir_->path() / "src").string(); }
  static std::string noise() { return (dir_->path() / "noise").string(); }
  static std::string path(const std::string& name) { return (dir_->path() / name).string(); }

  static CliResult generate(const std::string& out, std::vector<std::string> extra = {}) {
    std::vector<std::string> a = {"generate", "--manifest", src() + "/sources.jsonl", "--noise-manifest",
                                  noise() + "/noise_manifest.jsonl", "--out", out, "--counts", "2,2", "--seed", "7",
                                  "--jobs", "2"};
    a.insert(a.end(), extra.begin(), extra.end());
    return run(a);
  }

  static testutil::TempDir* dir_;
};

testutil::TempDir* CliTest::dir_ = nullptr;

}  // namespace

TEST(CliExitCodes, MapErrorCodes) {
  EXPECT_EQ(cli::exit_code_for(ErrorCode::kIoFailure), cli::kExitIo);
  EXPECT_EQ(cli::exit_code_for(ErrorCode::kParseError), cli::kExitData);
  EXPECT_EQ(cli::exit_code_for(ErrorCode::kMissingTrial), cli::kExitMismatch);
  EXPECT_EQ(cli::exit_code_for(ErrorCode::kConfigHashMismatch), cli::kExitMismatch);
  EXPECT_EQ(cli::exit_code_for(ErrorCode::kInvalidArgument), cli::kExitUsage);
}

TEST(CliExitCodes, UsageErrors) {
  EXPECT_EQ(run({"generate", "--bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"generate", "--manifest", "x"}).code, cli::kExitUsage);  // --out missing
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(CliExitCodes, MissingFileIsIo) {
  const CliResult r = run({"generate", "--manifest", "/nonexistent/m.jsonl", "--out", "/tmp/x"});
  EXPECT_EQ(r.code, cli::kExitIo);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST_F(CliTest, SameSeedSameTree) {
  const CliResult a = generate(path("g1"));
  ASSERT_EQ(a.code, 0) << a.err;
  const CliResult b = generate(path("g2"), {"--jobs", "1"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')), b.out.substr(0, b.out.find('\n')));
  EXPECT_EQ(testutil::read_tree(path("g1")), testutil::read_tree(path("g2")));
  EXPECT_NE(a.out.find("train: 2 bonafide, 2 spoofed"), std::string::npos) << a.out;
  EXPECT_NE(a.err.find("resolved config"), std::string::npos);
}

TEST_F(CliTest, NoiseOffAndSingleSpeaker) {
  ASSERT_EQ(generate(path("off"), {"--noise", "off"}).code, 0);
  for (const auto& r : read_annotations(path("off") + "/annotations.jsonl").records) {
    for (const auto& s : r.segments) ASSERT_FALSE(s.noise.has_value());
  }
  ASSERT_EQ(generate(path("single"), {"--mode", "single"}).code, 0);
  const Manifest src_m = read_manifest(src() + "/sources.jsonl");
  std::map<std::string, std::string> speaker_of;
  for (const auto& e : src_m.entries) speaker_of[e.id] = e.speaker;
  const Manifest longs = read_manifest(path("single") + "/long_manifest.jsonl");
  const AnnotationFile ann = read_annotations(path("single") + "/annotations.jsonl");
  for (std::size_t i = 0; i < ann.records.size(); ++i) {
    ASSERT_FALSE(longs.entries[i].speaker.empty());
    for (const auto& s : ann.records[i].segments) ASSERT_EQ(speaker_of.at(s.source_id), longs.entries[i].speaker);
  }
  EXPECT_EQ(generate(path("bad"), {"--mode", "trio"}).code, cli::kExitData);
  EXPECT_EQ(generate(path("bad"), {"--noise", "maybe"}).code, cli::kExitUsage);
}

TEST_F(CliTest, ConfigFileAndCommandLineOverride) {
  {
    std::ofstream cfg(path("gen.toml"));
    cfg << "# generation settings\n[generate]\nseed = 7\ncounts = \"1,1\"\nsnr_max = 5\n";
  }
  const CliResult a = run({"generate", "--config", path("gen.toml"), "--manifest", src() + "/sources.jsonl",
                     "--noise-manifest", noise() + "/noise_manifest.jsonl", "--out", path("cfg1"), "--counts", "2,2"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(read_manifest(path("cfg1") + "/long_manifest.jsonl").entries.size(), 12u);  // command line wins
  for (const auto& r : read_annotations(path("cfg1") + "/annotations.jsonl").records) {
    for (const auto& s : r.segments) {
      if (s.noise) ASSERT_LE(s.noise->snr_db, 5.0);  // from the file
    }
  }
  {
    std::ofstream bad(path("bad.toml"));
    bad << "seed 7\n";
  }
  EXPECT_EQ(run({"generate", "--config", path("bad.toml")}).code, cli::kExitUsage);
  EXPECT_EQ(run({"generate", "--config", path("missing.toml")}).code, cli::kExitIo);
}

TEST_F(CliTest, DataRootFromEnvironment) {
  // Manifest copied away from the clips: paths only resolve through the env var.
  std::filesystem::create_directories(path("elsewhere"));
  std::filesystem::copy_file(src() + "/sources.jsonl", path("elsewhere") + "/sources.jsonl",
                             std::filesystem::copy_options::overwrite_existing);
  const std::vector<std::string> args = {"generate", "--manifest", path("elsewhere") + "/sources.jsonl",
                                         "--noise", "off", "--out", path("env"), "--counts", "1,1"};
  ::unsetenv("LONGSPOOF_DATA_ROOT");
  EXPECT_EQ(run(args).code, cli::kExitIo);
  ::setenv("LONGSPOOF_DATA_ROOT", src().c_str(), 1);
  const CliResult r = run(args);
  ::unsetenv("LONGSPOOF_DATA_ROOT");
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST_F(CliTest, ScoreAndEvaluateMatchesLibrary) {
  ASSERT_EQ(generate(path("ev")).code, 0);
  const std::string m = path("ev") + "/long_manifest.jsonl";
  ASSERT_EQ(run({"score-oracle", "--manifest", m, "--partition", "eval", "--sigma", "0.4", "--out", path("eval.tsv")}).code, 0);
  ASSERT_EQ(run({"score-oracle", "--manifest", m, "--partition", "dev", "--sigma", "0.4", "--seed", "1", "--out", path("dev.tsv")}).code, 0);
  const CliResult r = run({"eval-detect", "--eval-scores", path("eval.tsv"), "--eval-manifest", m, "--dev-scores",
                     path("dev.tsv"), "--dev-manifest", m, "--format", "json", "--report", path("report.json")});
  ASSERT_EQ(r.code, 0) << r.err;

  Manifest full = read_manifest(m), ev = full, dv = full;
  ev.entries = full.in_partition(Partition::kEval);
  dv.entries = full.in_partition(Partition::kDev);
  const DetectionReport lib = evaluate_detection(read_scores(path("eval.tsv")), ev, read_scores(path("dev.tsv")), dv);
  EXPECT_EQ(nlohmann::json::parse(r.out), nlohmann::json::parse(report_to_json(lib)));
  EXPECT_EQ(nlohmann::json::parse(testutil::read_tree(dir_->path())["report.json"]),
            nlohmann::json::parse(report_to_json(lib)));
  EXPECT_EQ(read_scores(path("eval.tsv")).config_hash, full.metadata.config_hash);
}

TEST_F(CliTest, MissingTrialIsMismatchNamingTrial) {
  ASSERT_EQ(generate(path("mt")).code, 0);
  const std::string m = path("mt") + "/long_manifest.jsonl";
  ASSERT_EQ(run({"score-oracle", "--manifest", m, "--partition", "eval", "--out", path("mt.tsv")}).code, 0);
  ScoreFile f = read_scores(path("mt.tsv"));
  const std::string dropped = f.scores.back().trial_id;
  f.scores.pop_back();
  write_scores(f, path("mt_short.tsv"));
  const CliResult r = run({"eval-detect", "--eval-scores", path("mt_short.tsv"), "--eval-manifest", m, "--dev-scores",
                     path("mt.tsv"), "--dev-manifest", m, "--dev-partition", "eval"});
  EXPECT_EQ(r.code, cli::kExitMismatch);
  EXPECT_NE(r.err.find(dropped), std::string::npos) << r.err;

  {
    std::ofstream bad(path("garbage.tsv"));
    bad << "x\tnot-a-number\n";
  }
  EXPECT_EQ(run({"eval-detect", "--eval-scores", path("garbage.tsv"), "--eval-manifest", m, "--dev-scores",
                 path("mt.tsv"), "--dev-manifest", m}).code, cli::kExitData);
}

TEST_F(CliTest, ResegmentAndLocalize) {
  ASSERT_EQ(generate(path("loc"), {"--noise", "off"}).code, 0);
  const CliResult w = run({"resegment", "--long-manifest", path("loc") + "/long_manifest.jsonl", "--n-seconds", "1",
                     "--out", path("loc_w")});
  ASSERT_EQ(w.code, 0) << w.err;
  const std::string wm = path("loc_w") + "/window_manifest.jsonl";
  ASSERT_EQ(run({"score-oracle", "--manifest", wm, "--partition", "eval", "--sigma", "0", "--out", path("we.tsv")}).code, 0);
  ASSERT_EQ(run({"score-oracle", "--manifest", wm, "--partition", "dev", "--sigma", "0", "--out", path("wd.tsv")}).code, 0);
  const CliResult r = run({"eval-localize", "--eval-scores", path("we.tsv"), "--eval-manifest", wm, "--dev-scores",
                     path("wd.tsv"), "--dev-manifest", wm, "--eval-annotations", path("loc") + "/annotations.jsonl",
                     "--ap-ar", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("detection").at("eer_percent").get<double>(), 0.0);
  EXPECT_TRUE(j.at("ap").contains("0.50"));
}
