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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "cli.hpp"
#include "longspoof/errors.hpp"
#include "longspoof/metrics.hpp"
#include "longspoof/pipeline.hpp"
#include "longspoof/protocol.hpp"
#include "longspoof/scoring.hpp"
#include "longspoof/synthetic.hpp"
#include "test_util.hpp"

using namespace longspoof;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

long double energy(std::span<const float> x) {
  long double e = 0;
  for (float v : x) e += static_cast<long double>(v) * v;
  return e;
}

// SNR re-measured from a float mix: the noise component is output - speech.
double realized_snr(std::span<const float> speech, std::span<const float> mixed) {
  long double n = 0;
  for (std::size_t i = 0; i < speech.size(); ++i) {
    const long double d = static_cast<long double>(mixed[i]) - speech[i];
    n += d * d;
  }
  return static_cast<double>(10.0L * std::log10(energy(speech) / n));
}

int cli_run(std::vector<std::string> args, std::string* err = nullptr) {
  args.insert(args.begin(), "longspoof");
  std::ostringstream out, e;
  const int code = cli::run(args, out, e);
  if (err != nullptr) *err = e.str();
  return code;
}

// Collects the first few violations seen by concurrent checkers.
class Violations {
 public:
  void add(const std::string& what) {
    std::lock_guard lock(mu_);
    if (count_++ < 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  std::size_t count() const { return count_; }
  std::string summary() const { return count_ == 0 ? "0 violations" : fmt("%zu violations: ", count_.load()) + first_; }

 private:
  std::mutex mu_;
  std::atomic<std::size_t> count_{0};
  std::string first_;
};

// Composition checks shared by criteria 1 and 7.
void check_record(const LongFormRecord& r, const CompositionPlan& plan,
                  const std::map<std::string, Label>& source_label, Violations& v) {
  const AnnotationRecord a = annotation_of(r);
  if (const std::string problem = check_annotation(a); !problem.empty()) v.add(problem);
  if (r.annotations.size() != 10) v.add(r.longform_id + ": segment count");
  int bona = 0;
  for (const auto& s : r.annotations) {
    bona += s.label == Label::kBonafide;
    if (source_label.at(s.source_id) != s.label) v.add(r.longform_id + ": label of " + s.source_id);
  }
  const int expect = r.utterance_label == Label::kSpoofed ? 3 : 10;
  if (bona != expect) v.add(r.longform_id + fmt(": %d bonafide segments", bona));
  if (r.utterance_label != plan.utterance_label) v.add(r.longform_id + ": utterance label");
}

// --- 1. composition fidelity at full scale -----------------------------------

Verdict composition_fidelity() {
  const SyntheticSource src = make_synthetic_sources(SyntheticSourceOptions{});  // 1 s clips
  const NoisePool pool = NoisePool::in_memory(make_synthetic_noise({4, 3.0, 1}));
  std::map<std::string, Label> source_label;
  for (const auto& e : src.manifest.entries) source_label[e.id] = e.label;

  GenerateOptions o;
  o.seed = 1;
  o.jobs = workers();
  const auto t0 = std::chrono::steady_clock::now();
  const auto plans = plan_generation(src.manifest, &pool, o);
  std::map<std::pair<Partition, Label>, std::atomic<std::size_t>> tally;
  for (Partition p : kAllPartitions) {
    tally[{p, Label::kBonafide}];
    tally[{p, Label::kSpoofed}];
  }
  Violations v;
  render_all(plans, src.audio, &pool, o.trim, o.jobs, [&](std::size_t i, LongFormRecord&& r) {
    check_record(r, plans[i], source_label, v);
    ++tally.at({plans[i].partition, r.utterance_label});
  });
  const double elapsed = seconds_since(t0);

  bool counts_ok = true;
  std::string counts;
  for (const auto& [p, t] : reference_targets()) {
    const std::size_t b = tally.at({p, Label::kBonafide}), s = tally.at({p, Label::kSpoofed});
    counts_ok = counts_ok && b == t.bonafide && s == t.spoofed;
    counts += fmt("%s %zu/%zu ", std::string(to_string(p)).c_str(), b, s);
  }
  return {counts_ok && v.count() == 0 && elapsed < 600.0,
          counts + fmt("(%zu longs), %s, %.1f s on %u thread(s)", plans.size(), v.summary().c_str(), elapsed,
                       o.jobs)};
}

// --- 2. SNR exactness --------------------------------------------------------

Verdict snr_exactness() {
  SyntheticSourceOptions so;
  so.clips = {{Partition::kTrain, {50, 50}}};
  so.profile = DurationProfile::kUniform;
  so.min_seconds = 1.0;
  so.max_seconds = 6.0;
  so.seed = 2;
  const SyntheticSource src = make_synthetic_sources(so);
  const auto noise = make_synthetic_noise({4, 3.0, 2});
  RngStream rng = master_stream(2).derive("acceptance-snr");
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto& entry = src.manifest.entries[rng.below(src.manifest.entries.size())];
    const AudioBuffer speech = *src.audio.load(entry.id);
    const AudioBuffer& n = noise[rng.below(noise.size())].second;
    const double snr = rng.uniform(0.0, 30.0);
    const AudioBuffer mixed = mix_at_snr(speech, n, snr, rng.next_u64());
    worst = std::max(worst, std::fabs(realized_snr(speech.samples, mixed.samples) - snr));
  }
  return {worst <= 1e-3, fmt("1000 mixes, SNR in [0, 30] dB, max |realized - requested| = %.2e dB", worst)};
}

// --- 3. loudness -------------------------------------------------------------

Verdict loudness() {
  SyntheticSourceOptions so;
  so.clips = {{Partition::kTrain, {500, 500}}};
  so.profile = DurationProfile::kSourceLike;
  so.seed = 3;
  const SyntheticSource src = make_synthetic_sources(so);
  RngStream rng = master_stream(3).derive("acceptance-loudness");
  double worst = 0;
  for (const auto& e : src.manifest.entries) {
    const double target = rng.uniform(-33.0, -23.0);
    const AudioBuffer out = standardize(*src.audio.load(e.id), target);
    worst = std::max(worst, std::fabs(testutil::p56_oracle(out.samples) - target));
  }
  return {worst <= 0.5, fmt("%zu utterances, target in [-33, -23] dBFS, max |level - target| = %.3f dB",
                            src.manifest.entries.size(), worst)};
}

// --- 4. label propagation ----------------------------------------------------

Verdict label_propagation() {
  std::mt19937_64 gen(4);
  const double sweep[] = {0.01, 0.1, 0.5, 1.0, 2.0, 4.0};
  std::size_t cases = 0, mismatches = 0;
  while (cases < 10000) {
    const auto len = std::uniform_int_distribution<std::int64_t>(kSampleRate, 40 * kSampleRate)(gen);
    const auto tiling = testutil::random_tiling(gen, len, std::uniform_int_distribution<int>(1, 12)(gen));
    const auto flags = testutil::sample_labels(tiling, len);
    // Windows cut by the re-segmenter at a swept N ...
    const double n = sweep[cases % 6];
    const auto windows = segment_windows(LongFormView{"r", len, tiling, nullptr}, WindowOptions{n, std::nullopt, false});
    if (!windows.empty()) {
      const auto& w = windows[std::uniform_int_distribution<std::size_t>(0, windows.size() - 1)(gen)];
      mismatches += w.label != testutil::window_label_oracle(flags, w.start_sample, w.end_sample);
      ++cases;
    }
    // ... and arbitrary windows.
    const auto s = std::uniform_int_distribution<std::int64_t>(0, len - 1)(gen);
    const auto e = std::uniform_int_distribution<std::int64_t>(s + 1, len)(gen);
    mismatches += window_label(tiling, s, e) != testutil::window_label_oracle(flags, s, e);
    ++cases;
  }
  return {mismatches == 0, fmt("%zu cases, %zu mismatches", cases, mismatches)};
}

// --- 5. metric correctness ---------------------------------------------------

Manifest trial_manifest(std::size_t per_class, Partition p) {
  Manifest m;
  for (std::size_t i = 0; i < 2 * per_class; ++i) {
    ManifestEntry e;
    e.id = fmt("%s_%06zu", std::string(to_string(p)).c_str(), i);
    e.label = i % 2 ? Label::kSpoofed : Label::kBonafide;
    e.partition = p;
    m.entries.push_back(e);
  }
  return m;
}

Verdict metric_correctness() {
  std::vector<std::string> fails;
  std::string details;

  // (a) oracle scorer with sigma 0.
  const Manifest dev = trial_manifest(1000, Partition::kDev), eval = trial_manifest(1000, Partition::kEval);
  ScoreFile ds, es;
  ds.scores = oracle_scorer(dev, 0.0, master_stream(5).derive("dev"));
  es.scores = oracle_scorer(eval, 0.0, master_stream(5).derive("eval"));
  const DetectionReport a = evaluate_detection(es, eval, ds, dev);
  details += fmt("(a) EER %.2f%% HTER %.2f%%", a.eer_percent, a.hter_percent);
  if (fmt("%.2f", a.eer_percent) != "0.00" || fmt("%.2f", a.hter_percent) != "0.00") fails.push_back("a");

  // (b) informative scores paired with shuffled labels.
  const Manifest big = trial_manifest(10000, Partition::kEval);
  const auto scores = oracle_scorer(big, 0.5, master_stream(6));
  std::vector<Label> labels;
  for (const auto& e : big.entries) labels.push_back(e.label);
  RngStream shuffler = master_stream(6).derive("shuffle");
  shuffler.shuffle(std::span<Label>(labels));
  LabeledScores shuffled;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    (labels[i] == Label::kBonafide ? shuffled.bonafide : shuffled.spoofed).push_back(scores[i].score);
  }
  const double eer_b = eer(shuffled.bonafide, shuffled.spoofed).eer_percent;
  details += fmt(", (b) EER %.2f%%", eer_b);
  if (std::fabs(eer_b - 50.0) > 1.5) fails.push_back("b");

  // (c) exact invariance under strictly increasing transforms.
  std::mt19937_64 gen(7);
  const std::vector<std::function<double(double)>> transforms = {
      [](double x) { return std::exp(x); }, [](double x) { return x * x * x + x; },
      [](double x) { return 7.0 * std::atan(x) - 1.0; }, [](double x) { return 1.0 / (1.0 + std::exp(-x)); }};
  int c_checked = 0, c_bad = 0;
  for (int t = 0; t < 100; ++t) {
    std::normal_distribution<double> nb(1.0, 1.0), ns(0.0, 1.0);
    std::vector<double> b(300), s(250);
    for (auto& x : b) x = nb(gen);
    for (auto& x : s) x = ns(gen);
    const double base = eer(b, s).eer_percent;
    for (const auto& f : transforms) {
      std::vector<double> tb, ts;
      for (double x : b) tb.push_back(f(x));
      for (double x : s) ts.push_back(f(x));
      ++c_checked;
      c_bad += eer(tb, ts).eer_percent != base;
    }
  }
  details += fmt(", (c) %d/%d transforms exact", c_checked - c_bad, c_checked);
  if (c_bad != 0) fails.push_back("c");

  // (d) AP/AR against brute-force references.
  double worst = 0;
  int instances = 0;
  while (instances < 200) {
    std::vector<RecordEvents> recs;
    const int n = std::uniform_int_distribution<int>(1, 5)(gen);
    std::size_t events = 0;
    for (int i = 0; i < n; ++i) {
      recs.push_back(testutil::random_record(gen, fmt("r%d", i), 6));
      events += recs.back().ground_truth.size();
    }
    if (events > 20) continue;
    ++instances;
    for (double tau : {0.25, 0.5, 0.75, 0.95}) {
      worst = std::max(worst, std::fabs(ap_at(recs, tau) - testutil::ap_oracle(recs, tau)));
    }
    for (std::size_t cap : {1u, 2u, 5u, 10u, 20u, 50u, 100u}) {
      worst = std::max(worst, std::fabs(ar_at(recs, cap) - testutil::ar_oracle(recs, cap)));
    }
  }
  details += fmt(", (d) %d instances, max diff %.1e", instances, worst);
  if (worst > 1e-9) fails.push_back("d");

  // (e) proposals equal to ground truth.
  std::vector<RecordEvents> perfect;
  for (int i = 0; i < 50; ++i) {
    RecordEvents r = testutil::random_record(gen, fmt("p%d", i), 10);
    r.proposals = r.ground_truth;
    perfect.push_back(r);
  }
  const ApArReport rep = compute_ap_ar(perfect);
  bool e_ok = rep.ap.front().first == 0.25 && rep.ap.front().second == 100.0;
  for (const auto& [cap, ar] : rep.ar) e_ok = e_ok && ar == 100.0;
  details += fmt(", (e) AP@0.25 %.2f, AR@100..10 %s", rep.ap.front().second, e_ok ? "all 100.00" : "not 100");
  if (!e_ok) fails.push_back("e");

  std::string failed;
  for (const auto& f : fails) failed += f;
  return {fails.empty(), details + (failed.empty() ? "" : "; failed: " + failed)};
}

// --- helpers for CLI-driven datasets -----------------------------------------

struct Workspace {
  testutil::TempDir dir;
  std::string src() const { return (dir.path() / "src").string(); }
  std::string sources() const { return src() + "/sources.jsonl"; }
  std::string noise() const { return (dir.path() / "noise" / "noise_manifest.jsonl").string(); }
  std::string path(const std::string& name) const { return (dir.path() / name).string(); }
};

bool make_inputs(const Workspace& ws, std::string* err) {
  return cli_run({"make-synthetic-source", "--out", ws.src(), "--seed", "21", "--profile", "uniform",
                  "--min-seconds", "1", "--max-seconds", "3", "--train", "20,20", "--dev", "12,12", "--eval",
                  "12,12", "--speakers", "4"},
                 err) == 0 &&
         cli_run({"make-synthetic-noise", "--out", ws.path("noise"), "--clips-per-category", "3", "--seconds",
                  "2"},
                 err) == 0;
}

// --- 6. determinism ----------------------------------------------------------

Verdict determinism() {
  const Workspace ws;
  std::string err;
  if (!make_inputs(ws, &err)) return {false, "input generation failed: " + err};
  const std::vector<std::string> base = {"generate", "--manifest", ws.sources(), "--noise-manifest", ws.noise(),
                                         "--counts", "15,15", "--seed", "7"};
  std::vector<std::map<std::string, std::string>> trees;
  for (const auto& [name, jobs] : std::vector<std::pair<std::string, std::string>>{{"a", "1"}, {"b", "8"}, {"c", "8"}}) {
    auto args = base;
    args.insert(args.end(), {"--out", ws.path(name), "--jobs", jobs});
    if (cli_run(args, &err) != 0) return {false, "generate failed: " + err};
    trees.push_back(testutil::read_tree(ws.path(name)));
  }
  std::size_t bytes = 0;
  for (const auto& [k, v] : trees[0]) bytes += v.size();
  const bool same = trees[0] == trees[1] && trees[1] == trees[2];
  return {same && trees[0].size() == 3 + 90,
          fmt("%zu files (%zu bytes): 1-thread vs 8-thread vs 8-thread %s", trees[0].size(), bytes,
              same ? "byte-identical" : "DIFFER")};
}

// --- 7. ablation plumbing ----------------------------------------------------

struct Variant {
  std::string name;
  std::vector<std::string> flags;
  GenerateOptions options;  // what the flags mean at library level
};

// Validates one CLI-generated dataset against criteria 1-4 by re-planning it
// in memory: the rendered audio must encode to the bytes on disk, every noisy
// segment must hit its SNR, every segment its loudness target, and every
// window label the sample-level oracle.
std::string validate_dataset(const Workspace& ws, const std::string& out, const GenerateOptions& o,
                             bool expect_noise, bool single) {
  const Manifest sources = read_manifest(ws.sources());
  FileAudioSource audio(ws.src());
  std::map<std::string, Label> source_label;
  std::map<std::string, std::string> source_speaker;
  for (const auto& e : sources.entries) {
    audio.add(e.id, e.path);
    source_label[e.id] = e.label;
    source_speaker[e.id] = e.speaker;
  }
  const NoisePool pool = NoisePool::from_manifest(ws.noise());
  const NoisePool* pool_ptr = o.plan.noise.is_clean() ? nullptr : &pool;

  const Manifest longs = read_manifest(out + "/long_manifest.jsonl");
  const AnnotationFile ann = read_annotations(out + "/annotations.jsonl");
  if (longs.metadata.config_hash != hash_hex(generation_config_text(o, sources, pool_ptr))) {
    return "config hash differs from the library configuration";
  }
  const auto plans = plan_generation(sources, pool_ptr, o);
  if (plans.size() != longs.entries.size()) return "record count";

  // Criterion 1: counts per partition and label.
  std::map<std::pair<Partition, Label>, std::size_t> tally;
  for (const auto& e : longs.entries) ++tally[{e.partition, e.label}];
  for (const auto& [p, t] : o.targets) {
    if (tally[{p, Label::kBonafide}] != t.bonafide || tally[{p, Label::kSpoofed}] != t.spoofed) return "counts";
  }

  const auto disk = testutil::read_tree(out + "/audio");
  Violations v;
  double worst_snr = 0, worst_level = 0;
  std::size_t noisy = 0;
  for (std::size_t i = 0; i < plans.size(); ++i) {
    std::vector<SegmentTrace> trace;
    const LongFormRecord r = render(plans[i], audio, pool_ptr, o.trim, &trace);
    check_record(r, plans[i], source_label, v);
    if (annotation_of(r) != ann.records[i]) v.add(r.longform_id + ": annotation file differs");
    const auto encoded = encode_wav(r.audio);
    if (disk.at(r.longform_id + ".wav") != std::string(encoded.begin(), encoded.end())) v.add(r.longform_id + ": audio bytes differ");
    for (std::size_t k = 0; k < r.annotations.size(); ++k) {
      const auto& a = r.annotations[k];
      const std::span<const float> mixed(r.audio.samples.data() + a.start_sample, a.end_sample - a.start_sample);
      const auto& clean = trace[k].standardized.samples;
      // Criterion 3 on the standardized segment.
      worst_level = std::max(worst_level, std::fabs(testutil::p56_oracle(clean) - plans[i].segments[k].target_db));
      // Criterion 2 on the mixed segment.
      if (a.noise) {
        ++noisy;
        if (a.noise->snr_db < o.plan.noise.snr_min_db || a.noise->snr_db > o.plan.noise.snr_max_db) {
          v.add(r.longform_id + ": SNR outside range");
        }
        worst_snr = std::max(worst_snr, std::fabs(realized_snr(clean, mixed) - a.noise->snr_db));
      } else if (!std::equal(clean.begin(), clean.end(), mixed.begin())) {
        v.add(r.longform_id + ": clean segment altered");
      }
      if (single && source_speaker.at(a.source_id) != longs.entries[i].speaker) {
        v.add(r.longform_id + ": more than one speaker");
      }
    }
  }
  if (expect_noise != (noisy > 0)) v.add(fmt("%zu noisy segments", noisy));
  if (worst_snr > 1e-3) v.add(fmt("SNR error %.2e dB", worst_snr));
  if (worst_level > 0.5) v.add(fmt("level error %.3f dB", worst_level));

  // Criterion 4 through the resegment subcommand.
  std::string err;
  if (cli_run({"resegment", "--long-manifest", out + "/long_manifest.jsonl", "--n-seconds", "4", "--out",
               out + "_seg4"},
              &err) != 0) {
    return "resegment failed: " + err;
  }
  const Manifest windows = read_manifest(out + "_seg4/window_manifest.jsonl");
  for (const auto& w : windows.entries) {
    const auto* rec = ann.find(*w.parent);
    const auto flags = testutil::sample_labels(rec->segments, rec->num_samples);
    if (w.label != testutil::window_label_oracle(flags, *w.start_sample, *w.end_sample)) v.add(w.id + ": label");
  }
  return v.count() == 0 ? "" : v.summary();
}

Verdict ablation_plumbing() {
  const Workspace ws;
  std::string err;
  if (!make_inputs(ws, &err)) return {false, "input generation failed: " + err};

  GenerateOptions base;
  base.seed = 9;
  base.jobs = workers();
  base.targets = {{Partition::kTrain, {6, 6}}, {Partition::kDev, {6, 6}}, {Partition::kEval, {6, 6}}};
  std::vector<Variant> variants;
  variants.push_back({"multi", {}, base});
  Variant off{"noise-off", {"--noise", "off"}, base};
  off.options.plan.noise = NoiseConfig::clean();
  variants.push_back(off);
  for (double snr : {0.0, 5.0, 10.0, 20.0, 30.0}) {
    Variant v{fmt("snr-%g", snr), {"--snr-min", fmt("%g", snr), "--snr-max", fmt("%g", snr)}, base};
    v.options.plan.noise.snr_min_db = v.options.plan.noise.snr_max_db = snr;
    variants.push_back(v);
  }
  Variant wide{"snr-0-30", {"--snr-min", "0", "--snr-max", "30"}, base};
  wide.options.plan.noise.snr_max_db = 30.0;
  variants.push_back(wide);
  Variant single{"single", {"--mode", "single"}, base};
  single.options.plan.mode = SpeakerMode::kSingle;
  variants.push_back(single);

  std::vector<std::string> problems;
  for (const auto& v : variants) {
    std::vector<std::string> args = {"generate", "--manifest", ws.sources(), "--noise-manifest", ws.noise(),
                                     "--out", ws.path(v.name), "--counts", "6,6", "--seed", "9",
                                     "--jobs", std::to_string(workers())};
    args.insert(args.end(), v.flags.begin(), v.flags.end());
    if (cli_run(args, &err) != 0) {
      problems.push_back(v.name + ": generate failed");
      continue;
    }
    const std::string problem = validate_dataset(ws, ws.path(v.name), v.options, v.name != "noise-off",
                                                 v.name == "single");
    if (!problem.empty()) problems.push_back(v.name + ": " + problem);
  }

  // N sweep on the default dataset.
  const AnnotationFile ann = read_annotations(ws.path("multi") + "/annotations.jsonl");
  for (double n : {0.01, 0.1, 0.5, 1.0, 2.0, 4.0}) {
    const std::string out = ws.path(fmt("sweep_%g", n));
    if (cli_run({"resegment", "--long-manifest", ws.path("multi") + "/long_manifest.jsonl", "--n-seconds",
                 fmt("%g", n), "--out", out},
                &err) != 0) {
      problems.push_back(fmt("N=%g: resegment failed", n));
      continue;
    }
    const Manifest w = read_manifest(out + "/window_manifest.jsonl");
    std::size_t expect = 0;
    for (const auto& r : ann.records) expect += r.num_samples / std::llround(n * kSampleRate);
    std::size_t bad = w.entries.size() == expect ? 0 : 1;
    std::map<std::string, std::vector<std::uint8_t>> flags;
    for (const auto& e : w.entries) {
      auto it = flags.find(*e.parent);
      if (it == flags.end()) {
        const auto* r = ann.find(*e.parent);
        it = flags.emplace(*e.parent, testutil::sample_labels(r->segments, r->num_samples)).first;
      }
      bad += e.label != testutil::window_label_oracle(it->second, *e.start_sample, *e.end_sample);
    }
    if (bad) problems.push_back(fmt("N=%g: %zu window problems", n, bad));
  }

  std::string names;
  for (const auto& v : variants) names += (names.empty() ? "" : ",") + v.name;
  std::string detail = fmt("%zu datasets [%s] pass criteria 1-4; N sweep {0.01..4} ok", variants.size(), names.c_str());
  if (!problems.empty()) {
    detail = problems.front() + (problems.size() > 1 ? fmt(" (+%zu more)", problems.size() - 1) : "");
  }
  return {problems.empty(), detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"composition fidelity", composition_fidelity},
      {"SNR exactness", snr_exactness},
      {"loudness", loudness},
      {"label propagation", label_propagation},
      {"metric correctness", metric_correctness},
      {"determinism", determinism},
      {"ablation plumbing", ablation_plumbing},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("%s criterion %zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
