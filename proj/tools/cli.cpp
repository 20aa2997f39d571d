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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "longspoof/metrics.hpp"
#include "longspoof/pipeline.hpp"
#include "longspoof/scoring.hpp"
#include "longspoof/synthetic.hpp"

namespace longspoof::cli {
namespace {

constexpr const char* kDataRootEnv = "LONGSPOOF_DATA_ROOT";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(what + ": '" + text + "' is not a number");
  }
}

PartitionTargets parse_counts(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError("counts must look like BONAFIDE,SPOOFED, got '" + text + "'");
  try {
    return PartitionTargets{std::stoull(parts[0]), std::stoull(parts[1])};
  } catch (const std::exception&) {
    throw UsageError("counts must be non-negative integers, got '" + text + "'");
  }
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

// "--config FILE" takes key=value lines (TOML-style; '#' comments and
// [section] headers are ignored). Keys are long option names; options given
// on the command line win over the file.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  std::optional<std::string> config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a file name");
      config_path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    } else {
      out.push_back(args[i]);
    }
  }
  if (!config_path) return out;

  std::ifstream in(*config_path);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open config file " + *config_path);
  auto given = [&](const std::string& key) {
    const std::string flag = "--" + key;
    return std::any_of(out.begin(), out.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
  };
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> extra;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(*config_path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    std::replace(key.begin(), key.end(), '_', '-');
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (!given(key)) extra.push_back("--" + key + "=" + value);
  }
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

Manifest select_partition(const Manifest& m, const std::string& spec, Partition fallback) {
  if (spec == "all") return m;
  Partition p = fallback;
  if (spec == "auto") {
    const bool present = std::any_of(m.entries.begin(), m.entries.end(),
                                     [&](const ManifestEntry& e) { return e.partition == p; });
    if (!present) return m;
  } else {
    p = parse_partition(spec);
  }
  Manifest out;
  out.metadata = m.metadata;
  out.entries = m.in_partition(p);
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  write_file_atomic(p, text);
}

// ---------------------------------------------------------------------------

struct SyntheticSourceArgs {
  std::string out;
  std::uint64_t seed = 0;
  std::string profile = "fixed";
  double seconds = 1.0;
  double min_seconds = 2.0;
  double max_seconds = 10.0;
  double bonafide_mean = 2.4;
  double spoofed_mean = 2.65;
  double edge_silence = 0.1;
  std::size_t speakers = 8;
  std::string train = "40,40";
  std::string dev = "20,20";
  std::string eval = "20,20";
};

int cmd_make_synthetic_source(const SyntheticSourceArgs& a, std::ostream& out) {
  SyntheticSourceOptions o;
  o.seed = a.seed;
  o.profile = parse_duration_profile(a.profile);
  o.fixed_seconds = a.seconds;
  o.min_seconds = a.min_seconds;
  o.max_seconds = a.max_seconds;
  o.bonafide_mean_seconds = a.bonafide_mean;
  o.spoofed_mean_seconds = a.spoofed_mean;
  o.edge_silence_seconds = a.edge_silence;
  o.speakers_per_partition = a.speakers;
  o.clips = {{Partition::kTrain, parse_counts(a.train)},
             {Partition::kDev, parse_counts(a.dev)},
             {Partition::kEval, parse_counts(a.eval)}};
  const auto source = make_synthetic_sources(o);
  const auto path = write_synthetic_sources(source, a.out);
  out << "wrote " << source.manifest.entries.size() << " clips, manifest " << path.string() << "\n";
  return kExitOk;
}

struct SyntheticNoiseArgs {
  std::string out;
  std::uint64_t seed = 0;
  std::size_t clips = 4;
  double seconds = 3.0;
};

int cmd_make_synthetic_noise(const SyntheticNoiseArgs& a, std::ostream& out) {
  const auto clips = make_synthetic_noise(SyntheticNoiseOptions{a.clips, a.seconds, a.seed});
  const auto path = write_synthetic_noise(clips, a.out);
  out << "wrote " << clips.size() << " noise clips, manifest " << path.string() << "\n";
  return kExitOk;
}

struct GenerateArgs {
  std::string manifest;
  std::string noise_manifest;
  std::string out;
  std::string data_root;
  std::uint64_t seed = 0;
  std::string mode = "multi";
  std::string noise = "on";
  double snr_min = 0.0;
  double snr_max = 10.0;
  std::string noise_weights = "0.25,0.25,0.25,0.25";
  std::string counts;
  std::string train_counts;
  std::string dev_counts;
  std::string eval_counts;
  std::string partitions = "train,dev,eval";
  int segments = 10;
  int bonafide_in_spoofed = 3;
  double top_db = 60.0;
  double target_db_min = -33.0;
  double target_db_max = -23.0;
  unsigned jobs = default_jobs();
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  const Manifest sources = read_manifest(a.manifest);
  const std::filesystem::path root =
      a.data_root.empty() ? std::filesystem::path(a.manifest).parent_path() : std::filesystem::path(a.data_root);
  FileAudioSource audio(root);
  for (const auto& e : sources.entries) audio.add(e.id, e.path);

  GenerateOptions o;
  o.seed = a.seed;
  o.jobs = std::max(1u, a.jobs);
  o.plan.mode = parse_speaker_mode(a.mode);
  o.plan.composition = CompositionConfig{a.segments, a.bonafide_in_spoofed};
  o.plan.target_db_min = a.target_db_min;
  o.plan.target_db_max = a.target_db_max;
  o.trim.top_db = a.top_db;

  std::optional<NoisePool> pool;
  if (a.noise == "on") {
    const auto w = split(a.noise_weights, ',');
    if (w.size() != 4) throw UsageError("--noise-weights needs four values: none,babble,music,noise");
    for (std::size_t i = 0; i < 4; ++i) o.plan.noise.weights[i] = parse_double(w[i], "--noise-weights");
    o.plan.noise.snr_min_db = a.snr_min;
    o.plan.noise.snr_max_db = a.snr_max;
    if (!o.plan.noise.is_clean()) {
      if (a.noise_manifest.empty()) throw UsageError("--noise on needs --noise-manifest");
      pool = NoisePool::from_manifest(a.noise_manifest);
    }
  } else if (a.noise == "off") {
    o.plan.noise = NoiseConfig::clean();
  } else {
    throw UsageError("--noise must be on or off");
  }

  const auto reference = reference_targets();
  o.targets.clear();
  for (const auto& name : split(a.partitions, ',')) {
    const Partition p = parse_partition(trim(name));
    o.targets[p] = a.counts.empty() ? reference.at(p) : parse_counts(a.counts);
  }
  const std::pair<Partition, const std::string*> overrides[] = {
      {Partition::kTrain, &a.train_counts}, {Partition::kDev, &a.dev_counts}, {Partition::kEval, &a.eval_counts}};
  for (const auto& [p, text] : overrides) {
    if (!text->empty()) o.targets[p] = parse_counts(*text);
  }

  const auto ds = generate_dataset(sources, audio, pool ? &*pool : nullptr, o, a.out);
  std::map<std::pair<Partition, Label>, std::size_t> tally;
  for (const auto& e : ds.manifest.entries) ++tally[{e.partition, e.label}];
  out << "config_hash " << ds.manifest.metadata.config_hash << "\n";
  for (const auto& [p, t] : o.targets) {
    out << to_string(p) << ": " << tally[{p, Label::kBonafide}] << " bonafide, "
        << tally[{p, Label::kSpoofed}] << " spoofed long-form records\n";
  }
  out << "wrote " << (std::filesystem::path(a.out) / "long_manifest.jsonl").string() << "\n";
  return kExitOk;
}

struct ResegmentArgs {
  std::string long_manifest;
  std::string annotations;
  std::string out;
  double n_seconds = 4.0;
  double stride = 0.0;
  bool materialize = false;
  unsigned jobs = default_jobs();
};

int cmd_resegment(const ResegmentArgs& a, std::ostream& out) {
  WindowOptions w;
  w.n_seconds = a.n_seconds;
  if (a.stride > 0.0) w.stride_seconds = a.stride;
  w.materialize_audio = a.materialize;
  const std::filesystem::path ann =
      a.annotations.empty() ? std::filesystem::path(a.long_manifest).parent_path() / "annotations.jsonl"
                            : std::filesystem::path(a.annotations);
  const Manifest windows = resegment_dataset(a.long_manifest, ann, w, a.out, std::max(1u, a.jobs));
  std::map<std::pair<Partition, Label>, std::size_t> tally;
  for (const auto& e : windows.entries) ++tally[{e.partition, e.label}];
  for (Partition p : kAllPartitions) {
    const auto b = tally[{p, Label::kBonafide}];
    const auto s = tally[{p, Label::kSpoofed}];
    if (b + s > 0) out << to_string(p) << ": " << b << " bonafide, " << s << " spoofed windows\n";
  }
  out << "wrote " << (std::filesystem::path(a.out) / "window_manifest.jsonl").string() << "\n";
  return kExitOk;
}

struct ScoreArgs {
  std::string manifest;
  std::string out;
  std::string scorer = "oracle";
  std::string partition = "all";
  double sigma = 0.0;
  double value = 0.5;
  std::uint64_t seed = 0;
};

int cmd_score_oracle(const ScoreArgs& a, std::ostream& out) {
  const Manifest m = select_partition(read_manifest(a.manifest), a.partition, Partition::kEval);
  const RngStream rng = derive_rng_streams(a.seed).scoring();
  ScoreFile file;
  if (a.scorer == "oracle") {
    file.scores = oracle_scorer(m, a.sigma, rng);
  } else if (a.scorer == "constant") {
    file.scores = constant_scorer(m, a.value);
  } else if (a.scorer == "random") {
    file.scores = random_scorer(m, rng);
  } else {
    throw UsageError("--scorer must be oracle, constant or random");
  }
  if (!m.metadata.config_hash.empty()) file.config_hash = m.metadata.config_hash;
  write_scores(file, a.out);
  out << "wrote " << file.scores.size() << " scores to " << a.out << "\n";
  return kExitOk;
}

struct EvalArgs {
  std::string eval_scores;
  std::string eval_manifest;
  std::string dev_scores;
  std::string dev_manifest;
  std::string eval_partition = "auto";
  std::string dev_partition = "auto";
  std::string report;
  std::string format = "text";
  // localization only
  std::string eval_annotations;
  bool ap_ar = false;
  double resolution = kDefaultResolution;
  std::optional<double> threshold;
};

int cmd_eval(const EvalArgs& a, bool localize, std::ostream& out) {
  if (a.format != "text" && a.format != "json") throw UsageError("--format must be text or json");
  const Manifest eval_m = select_partition(read_manifest(a.eval_manifest), a.eval_partition, Partition::kEval);
  const Manifest dev_m = select_partition(read_manifest(a.dev_manifest), a.dev_partition, Partition::kDev);
  const ScoreFile eval_s = read_scores(a.eval_scores);
  const ScoreFile dev_s = read_scores(a.dev_scores);
  std::string json;
  std::string text;
  if (!localize) {
    const DetectionReport r = evaluate_detection(eval_s, eval_m, dev_s, dev_m);
    json = report_to_json(r);
    text = report_to_text(r);
  } else {
    LocalizationOptions lo;
    lo.resolution_s = a.resolution;
    lo.binarize_threshold = a.threshold;
    lo.compute_ap_ar = a.ap_ar;
    std::optional<AnnotationFile> ann;
    if (a.ap_ar) {
      if (a.eval_annotations.empty()) throw UsageError("--ap-ar needs --eval-annotations");
      ann = read_annotations(a.eval_annotations);
    }
    const LocalizationReport r =
        evaluate_localization(eval_s, eval_m, dev_s, dev_m, ann ? &*ann : nullptr, lo);
    json = report_to_json(r);
    text = report_to_text(r);
  }
  out << (a.format == "json" ? json + "\n" : text);
  if (!a.report.empty()) write_text(a.report, json + "\n");
  return kExitOk;
}

void add_eval_options(CLI::App* sub, EvalArgs& a) {
  sub->add_option("--eval-scores", a.eval_scores, "Evaluation score TSV")->required();
  sub->add_option("--eval-manifest", a.eval_manifest, "Evaluation manifest")->required();
  sub->add_option("--dev-scores", a.dev_scores, "Development score TSV")->required();
  sub->add_option("--dev-manifest", a.dev_manifest, "Development manifest")->required();
  sub->add_option("--eval-partition", a.eval_partition,
                  "Partition of the eval manifest to use: auto|all|train|dev|eval")
      ->capture_default_str();
  sub->add_option("--dev-partition", a.dev_partition,
                  "Partition of the dev manifest to use: auto|all|train|dev|eval")
      ->capture_default_str();
  sub->add_option("--report", a.report, "Also write the JSON report here");
  sub->add_option("--format", a.format, "stdout format: text|json")->capture_default_str();
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIoFailure:
      return kExitIo;
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
    case ErrorCode::kMissingTrial:
    case ErrorCode::kUnknownTrial:
    case ErrorCode::kConfigHashMismatch:
      return kExitMismatch;
    case ErrorCode::kNotWav:
    case ErrorCode::kUnsupportedFormat:
    case ErrorCode::kNoActivity:
    case ErrorCode::kEmptyCategory:
    case ErrorCode::kSilentNoise:
    case ErrorCode::kInsufficientSources:
    case ErrorCode::kParseError:
    case ErrorCode::kDuplicateId:
    case ErrorCode::kDuplicateTrial:
    case ErrorCode::kOneClassOnly:
      return kExitData;
  }
  return kExitInternal;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Long-form partially spoofed audio: dataset generation and evaluation", "longspoof"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);  // last occurrence wins
  app.set_version_flag("--version", std::string(kToolVersion));
  app.footer(
      "Options may also come from --config FILE (key=value lines). Data root: --data-root or $"
      "LONGSPOOF_DATA_ROOT.\nExit codes: 0 ok, 1 internal, 2 usage/config, 3 I/O, 4 data, 5 "
      "score/manifest mismatch.");

  SyntheticSourceArgs ssa;
  auto* ss = app.add_subcommand("make-synthetic-source", "Write labeled synthetic source clips and manifest");
  ss->add_option("--out", ssa.out, "Output directory")->required();
  ss->add_option("--seed", ssa.seed, "Seed")->capture_default_str();
  ss->add_option("--profile", ssa.profile, "Duration profile: fixed|uniform|source-like")->capture_default_str();
  ss->add_option("--seconds", ssa.seconds, "Clip length for the fixed profile")->capture_default_str();
  ss->add_option("--min-seconds", ssa.min_seconds, "Shortest clip")->capture_default_str();
  ss->add_option("--max-seconds", ssa.max_seconds, "Longest clip")->capture_default_str();
  ss->add_option("--bonafide-mean", ssa.bonafide_mean, "Mean bonafide length (source-like)")->capture_default_str();
  ss->add_option("--spoofed-mean", ssa.spoofed_mean, "Mean spoofed length (source-like)")->capture_default_str();
  ss->add_option("--edge-silence", ssa.edge_silence, "Silence before and after each clip, seconds")->capture_default_str();
  ss->add_option("--speakers", ssa.speakers, "Speakers per partition")->capture_default_str();
  ss->add_option("--train", ssa.train, "Train clip counts BONAFIDE,SPOOFED")->capture_default_str();
  ss->add_option("--dev", ssa.dev, "Dev clip counts")->capture_default_str();
  ss->add_option("--eval", ssa.eval, "Eval clip counts")->capture_default_str();

  SyntheticNoiseArgs sna;
  auto* sn = app.add_subcommand("make-synthetic-noise", "Write a synthetic babble/music/noise pool");
  sn->add_option("--out", sna.out, "Output directory")->required();
  sn->add_option("--seed", sna.seed, "Seed")->capture_default_str();
  sn->add_option("--clips-per-category", sna.clips, "Clips per category")->capture_default_str();
  sn->add_option("--seconds", sna.seconds, "Clip length")->capture_default_str();

  GenerateArgs ga;
  auto* gen = app.add_subcommand("generate", "Compose long-form records from a source manifest");
  gen->add_option("--manifest", ga.manifest, "Source manifest (JSONL)")->required();
  gen->add_option("--noise-manifest", ga.noise_manifest, "Noise pool manifest (JSONL)");
  gen->add_option("--out", ga.out, "Output directory")->required();
  gen->add_option("--data-root", ga.data_root, "Root for relative source paths")->envname(kDataRootEnv);
  gen->add_option("--seed", ga.seed, "Master seed")->capture_default_str();
  gen->add_option("--mode", ga.mode, "Speaker mode: multi|single")->capture_default_str();
  gen->add_option("--noise", ga.noise, "Noise augmentation: on|off")->capture_default_str();
  gen->add_option("--snr-min", ga.snr_min, "Lowest SNR, dB")->capture_default_str();
  gen->add_option("--snr-max", ga.snr_max, "Highest SNR, dB")->capture_default_str();
  gen->add_option("--noise-weights", ga.noise_weights, "Weights none,babble,music,noise")->capture_default_str();
  gen->add_option("--counts", ga.counts, "Long-form counts BONAFIDE,SPOOFED for every partition");
  gen->add_option("--train-counts", ga.train_counts, "Train counts override");
  gen->add_option("--dev-counts", ga.dev_counts, "Dev counts override");
  gen->add_option("--eval-counts", ga.eval_counts, "Eval counts override");
  gen->add_option("--partitions", ga.partitions, "Partitions to generate")->capture_default_str();
  gen->add_option("--segments", ga.segments, "Segments per long-form record")->capture_default_str();
  gen->add_option("--bonafide-in-spoofed", ga.bonafide_in_spoofed, "Bonafide segments in a spoofed record")->capture_default_str();
  gen->add_option("--top-db", ga.top_db, "Silence threshold below the loudest frame, dB")->capture_default_str();
  gen->add_option("--target-db-min", ga.target_db_min, "Lowest active-level target, dBFS")->capture_default_str();
  gen->add_option("--target-db-max", ga.target_db_max, "Highest active-level target, dBFS")->capture_default_str();
  gen->add_option("--jobs", ga.jobs, "Render threads")->capture_default_str();

  ResegmentArgs ra;
  auto* reseg = app.add_subcommand("resegment", "Cut long-form records into N-second windows");
  reseg->add_option("--long-manifest", ra.long_manifest, "long_manifest.jsonl of a generated dataset")->required();
  reseg->add_option("--annotations", ra.annotations, "Annotation file (default: next to the manifest)");
  reseg->add_option("--n-seconds", ra.n_seconds, "Window length, seconds")->capture_default_str();
  reseg->add_option("--stride", ra.stride, "Window stride, seconds (default: window length)");
  reseg->add_option("--out", ra.out, "Output directory")->required();
  reseg->add_flag("--materialize", ra.materialize, "Write a WAV per window");
  reseg->add_option("--jobs", ra.jobs, "Threads for materializing")->capture_default_str();

  ScoreArgs sa;
  auto* score = app.add_subcommand("score-oracle", "Write synthetic scores for a manifest");
  score->add_option("--manifest", sa.manifest, "Manifest to score")->required();
  score->add_option("--out", sa.out, "Score TSV")->required();
  score->add_option("--scorer", sa.scorer, "oracle|constant|random")->capture_default_str();
  score->add_option("--partition", sa.partition, "all|auto|train|dev|eval")->capture_default_str();
  score->add_option("--sigma", sa.sigma, "Oracle noise standard deviation")->capture_default_str();
  score->add_option("--value", sa.value, "Constant scorer value")->capture_default_str();
  score->add_option("--seed", sa.seed, "Seed")->capture_default_str();

  EvalArgs da;
  auto* det = app.add_subcommand("eval-detect", "EER and HTER of a score file");
  add_eval_options(det, da);

  EvalArgs la;
  auto* loc = app.add_subcommand("eval-localize", "Window-level EER/HTER and chunk AP/AR");
  add_eval_options(loc, la);
  loc->add_option("--eval-annotations", la.eval_annotations, "Annotation file of the eval records");
  loc->add_flag("--ap-ar", la.ap_ar, "Compute AP and AR");
  loc->add_option("--resolution", la.resolution, "Chunk length, seconds")->capture_default_str();
  loc->add_option("--threshold", la.threshold, "Binarization threshold (default: dev EER threshold)");

  try {
    std::vector<std::string> args = expand_config(
        std::vector<std::string>(raw_args.begin() + (raw_args.empty() ? 0 : 1), raw_args.end()));
    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitUsage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    err << "[longspoof] " << chosen->get_name() << " resolved config:\n"
        << chosen->config_to_str(true, false);

    if (chosen == ss) return cmd_make_synthetic_source(ssa, out);
    if (chosen == sn) return cmd_make_synthetic_noise(sna, out);
    if (chosen == gen) return cmd_generate(ga, out);
    if (chosen == reseg) return cmd_resegment(ra, out);
    if (chosen == score) return cmd_score_oracle(sa, out);
    if (chosen == det) return cmd_eval(da, false, out);
    if (chosen == loc) return cmd_eval(la, true, out);
    return kExitInternal;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace longspoof::cli
