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

#include "longspoof/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "longspoof/errors.hpp"

namespace longspoof {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_both_classes(std::span<const double> bonafide, std::span<const double> spoofed) {
  if (bonafide.empty() || spoofed.empty()) {
    throw Error(ErrorCode::kOneClassOnly,
                "need at least one bonafide and one spoofed trial (got " +
                    std::to_string(bonafide.size()) + " and " + std::to_string(spoofed.size()) + ")");
  }
}

std::vector<double> sorted_copy(std::span<const double> x) {
  std::vector<double> v(x.begin(), x.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

DetCurve det_curve(std::span<const double> bonafide, std::span<const double> spoofed) {
  require_both_classes(bonafide, spoofed);
  const auto bona = sorted_copy(bonafide);
  const auto spoof = sorted_copy(spoofed);
  std::vector<double> thresholds;
  thresholds.reserve(bona.size() + spoof.size());
  std::merge(bona.begin(), bona.end(), spoof.begin(), spoof.end(), std::back_inserter(thresholds));
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  const auto nb = static_cast<double>(bona.size());
  const auto ns = static_cast<double>(spoof.size());
  DetCurve curve;
  curve.points.reserve(thresholds.size() + 1);
  std::size_t bona_below = 0;   // bonafide with score < t
  std::size_t spoof_below = 0;  // spoofed with score < t
  for (double t : thresholds) {
    while (bona_below < bona.size() && bona[bona_below] < t) ++bona_below;
    while (spoof_below < spoof.size() && spoof[spoof_below] < t) ++spoof_below;
    curve.points.push_back(
        DetPoint{t, static_cast<double>(spoof.size() - spoof_below) / ns,
                 static_cast<double>(bona_below) / nb});
  }
  curve.points.push_back(DetPoint{kInf, 0.0, 1.0});
  return curve;
}

EerResult eer(std::span<const double> bonafide, std::span<const double> spoofed) {
  const DetCurve curve = det_curve(bonafide, spoofed);
  const auto& pts = curve.points;
  // FAR - FRR is non-increasing along the sweep; it starts at +1 and ends at -1.
  std::size_t m = 0;
  while (pts[m].far - pts[m].frr > 0.0) ++m;

  if (pts[m].far == pts[m].frr) {
    return EerResult{pts[m].far * 100.0, pts[m].threshold};
  }
  const DetPoint& a = pts[m - 1];
  const DetPoint& b = pts[m];
  // Intersection of segment a-b with FAR == FRR, written so that swapping the
  // two axes and the segment direction yields the identical expression.
  const double eer_rate = (a.far * b.frr - b.far * a.frr) / ((a.far - b.far) + (b.frr - a.frr));
  const double t = a.far != b.far ? (a.far - eer_rate) / (a.far - b.far)
                                  : (eer_rate - a.frr) / (b.frr - a.frr);
  const double hi = std::isfinite(b.threshold) ? b.threshold : std::nextafter(a.threshold, kInf);
  return EerResult{eer_rate * 100.0, a.threshold + t * (hi - a.threshold)};
}

ErrorRates error_rates_at(std::span<const double> bonafide, std::span<const double> spoofed,
                          double threshold) {
  require_both_classes(bonafide, spoofed);
  if (std::isnan(threshold)) throw Error(ErrorCode::kInvalidArgument, "threshold is NaN");
  const auto rejected = std::count_if(bonafide.begin(), bonafide.end(),
                                      [&](double s) { return s < threshold; });
  const auto accepted = std::count_if(spoofed.begin(), spoofed.end(),
                                      [&](double s) { return s >= threshold; });
  return ErrorRates{static_cast<double>(accepted) / static_cast<double>(spoofed.size()),
                    static_cast<double>(rejected) / static_cast<double>(bonafide.size())};
}

double hter(std::span<const double> bonafide, std::span<const double> spoofed, double threshold) {
  const ErrorRates r = error_rates_at(bonafide, spoofed, threshold);
  return (r.far + r.frr) / 2.0 * 100.0;
}

LabeledScores join_scores(const ScoreFile& scores, const Manifest& manifest) {
  if (scores.config_hash && !manifest.metadata.config_hash.empty() &&
      *scores.config_hash != manifest.metadata.config_hash) {
    throw Error(ErrorCode::kConfigHashMismatch, "score file hash " + *scores.config_hash +
                                                    " != manifest hash " +
                                                    manifest.metadata.config_hash);
  }
  std::unordered_map<std::string_view, double> by_id;
  by_id.reserve(scores.scores.size());
  for (const auto& s : scores.scores) {
    if (!by_id.emplace(s.trial_id, s.score).second) {
      throw Error(ErrorCode::kDuplicateTrial, "trial '" + s.trial_id + "'");
    }
  }
  LabeledScores out;
  for (const auto& e : manifest.entries) {
    auto it = by_id.find(e.id);
    if (it == by_id.end()) throw Error(ErrorCode::kMissingTrial, "no score for trial '" + e.id + "'");
    (e.label == Label::kBonafide ? out.bonafide : out.spoofed).push_back(it->second);
  }
  if (by_id.size() != manifest.entries.size()) {
    std::unordered_map<std::string_view, bool> known;
    for (const auto& e : manifest.entries) known.emplace(e.id, true);
    for (const auto& s : scores.scores) {
      if (!known.contains(s.trial_id)) {
        throw Error(ErrorCode::kUnknownTrial, "trial '" + s.trial_id + "' is not in the manifest");
      }
    }
  }
  return out;
}

DetectionReport evaluate_detection(const LabeledScores& eval_set, const LabeledScores& dev_set) {
  DetectionReport r;
  const EerResult e = eer(eval_set.bonafide, eval_set.spoofed);
  const EerResult d = eer(dev_set.bonafide, dev_set.spoofed);
  const ErrorRates rates = error_rates_at(eval_set.bonafide, eval_set.spoofed, d.threshold);
  r.eer_percent = e.eer_percent;
  r.eer_threshold = e.threshold;
  r.operating_threshold = d.threshold;
  r.far_percent = rates.far * 100.0;
  r.frr_percent = rates.frr * 100.0;
  r.hter_percent = (rates.far + rates.frr) / 2.0 * 100.0;
  r.eval_bonafide = eval_set.bonafide.size();
  r.eval_spoofed = eval_set.spoofed.size();
  r.dev_bonafide = dev_set.bonafide.size();
  r.dev_spoofed = dev_set.spoofed.size();
  return r;
}

DetectionReport evaluate_detection(const ScoreFile& eval_scores, const Manifest& eval_manifest,
                                   const ScoreFile& dev_scores, const Manifest& dev_manifest) {
  return evaluate_detection(join_scores(eval_scores, eval_manifest),
                            join_scores(dev_scores, dev_manifest));
}

// ---------------------------------------------------------------------------

ChunkGrid make_grid(std::int64_t num_samples, double resolution_s) {
  if (!(resolution_s > 0.0)) throw Error(ErrorCode::kInvalidArgument, "resolution must be > 0");
  const double chunk = resolution_s * kSampleRate;
  const auto n = static_cast<std::int64_t>(std::floor(static_cast<double>(num_samples) / chunk + 1e-9));
  ChunkGrid grid;
  grid.resolution_s = resolution_s;
  grid.boundaries.resize(static_cast<std::size_t>(std::max<std::int64_t>(n, 0) + 1));
  for (std::size_t i = 0; i < grid.boundaries.size(); ++i) {
    grid.boundaries[i] = std::llround(static_cast<double>(i) * chunk);
  }
  return grid;
}

std::vector<std::uint8_t> rasterize_labels(std::span<const SegmentAnnotation> annotations,
                                           const ChunkGrid& grid) {
  std::vector<std::uint8_t> labels(grid.num_chunks(), 0);
  for (const auto& a : annotations) {
    if (a.label != Label::kSpoofed) continue;
    // First chunk ending after the annotation start, up to the last chunk
    // starting before its end.
    auto first = std::upper_bound(grid.boundaries.begin() + 1, grid.boundaries.end(), a.start_sample);
    for (auto it = first; it != grid.boundaries.end(); ++it) {
      const auto chunk = static_cast<std::size_t>(it - grid.boundaries.begin() - 1);
      if (grid.boundaries[chunk] >= a.end_sample) break;
      labels[chunk] = 1;
    }
  }
  return labels;
}

std::vector<double> rasterize_scores(std::span<const WindowScore> windows, const ChunkGrid& grid) {
  std::vector<WindowScore> sorted(windows.begin(), windows.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const WindowScore& a, const WindowScore& b) {
    return a.start_sample < b.start_sample;
  });
  std::vector<double> scores(grid.num_chunks(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const double mid = 0.5 * static_cast<double>(grid.boundaries[i] + grid.boundaries[i + 1]);
    for (const auto& w : sorted) {
      if (static_cast<double>(w.start_sample) > mid) break;
      if (mid < static_cast<double>(w.end_sample)) {
        scores[i] = w.score;
        break;
      }
    }
  }
  return scores;
}

std::vector<LocalizationEvent> extract_proposals(std::span<const double> chunk_scores,
                                                 double threshold) {
  std::vector<LocalizationEvent> events;
  std::size_t i = 0;
  while (i < chunk_scores.size()) {
    if (!(chunk_scores[i] < threshold)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    double sum = 0.0;
    while (i < chunk_scores.size() && chunk_scores[i] < threshold) {
      sum += 1.0 - chunk_scores[i];
      ++i;
    }
    events.push_back(LocalizationEvent{static_cast<std::int64_t>(start), static_cast<std::int64_t>(i),
                                       sum / static_cast<double>(i - start)});
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const LocalizationEvent& a, const LocalizationEvent& b) {
                     return a.confidence > b.confidence;
                   });
  return events;
}

std::vector<LocalizationEvent> ground_truth_events(std::span<const std::uint8_t> chunk_labels) {
  std::vector<LocalizationEvent> events;
  std::size_t i = 0;
  while (i < chunk_labels.size()) {
    if (chunk_labels[i] == 0) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < chunk_labels.size() && chunk_labels[i] != 0) ++i;
    events.push_back(LocalizationEvent{static_cast<std::int64_t>(start), static_cast<std::int64_t>(i), 1.0});
  }
  return events;
}

double iou(const LocalizationEvent& a, const LocalizationEvent& b) {
  const std::int64_t inter =
      std::max<std::int64_t>(0, std::min(a.end_chunk, b.end_chunk) - std::max(a.start_chunk, b.start_chunk));
  const std::int64_t uni = (a.end_chunk - a.start_chunk) + (b.end_chunk - b.start_chunk) - inter;
  if (uni <= 0) return 0.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

std::vector<bool> greedy_match(std::span<const LocalizationEvent> ordered_proposals,
                               std::span<const LocalizationEvent> ground_truth, double tau) {
  std::vector<bool> taken(ground_truth.size(), false);
  std::vector<bool> hit(ordered_proposals.size(), false);
  for (std::size_t p = 0; p < ordered_proposals.size(); ++p) {
    double best = -1.0;
    std::size_t best_g = ground_truth.size();
    for (std::size_t g = 0; g < ground_truth.size(); ++g) {
      if (taken[g]) continue;
      const double v = iou(ordered_proposals[p], ground_truth[g]);
      if (v > best) {
        best = v;
        best_g = g;
      }
    }
    if (best_g < ground_truth.size() && best >= tau) {
      taken[best_g] = true;
      hit[p] = true;
    }
  }
  return hit;
}

namespace {

struct RankedProposal {
  std::size_t record;
  std::size_t index;  // within record
  const LocalizationEvent* event;
};

bool ranks_before(const RankedProposal& a, const RankedProposal& b) {
  if (a.event->confidence != b.event->confidence) return a.event->confidence > b.event->confidence;
  if (a.record != b.record) return a.record < b.record;
  return a.event->start_chunk < b.event->start_chunk;
}

}  // namespace

double ap_at(std::span<const RecordEvents> records, double tau) {
  std::size_t total_gt = 0;
  std::vector<RankedProposal> ranked;
  for (std::size_t r = 0; r < records.size(); ++r) {
    total_gt += records[r].ground_truth.size();
    for (std::size_t i = 0; i < records[r].proposals.size(); ++i) {
      ranked.push_back(RankedProposal{r, i, &records[r].proposals[i]});
    }
  }
  if (total_gt == 0 || ranked.empty()) return 0.0;
  std::sort(ranked.begin(), ranked.end(), ranks_before);

  // Matching is per record; the global order restricted to a record is that
  // record's matching order.
  std::vector<std::vector<LocalizationEvent>> per_record(records.size());
  std::vector<std::vector<std::size_t>> slot(records.size());
  for (std::size_t k = 0; k < ranked.size(); ++k) {
    per_record[ranked[k].record].push_back(*ranked[k].event);
    slot[ranked[k].record].push_back(k);
  }
  std::vector<bool> tp(ranked.size(), false);
  for (std::size_t r = 0; r < records.size(); ++r) {
    const auto hits = greedy_match(per_record[r], records[r].ground_truth, tau);
    for (std::size_t i = 0; i < hits.size(); ++i) tp[slot[r][i]] = hits[i];
  }

  std::vector<double> precision(ranked.size());
  std::vector<double> recall(ranked.size());
  std::size_t cum_tp = 0;
  for (std::size_t k = 0; k < ranked.size(); ++k) {
    if (tp[k]) ++cum_tp;
    precision[k] = static_cast<double>(cum_tp) / static_cast<double>(k + 1);
    recall[k] = static_cast<double>(cum_tp) / static_cast<double>(total_gt);
  }
  // All-point interpolation: precision envelope from the right, summed over
  // recall increments.
  for (std::size_t k = ranked.size() - 1; k > 0; --k) {
    precision[k - 1] = std::max(precision[k - 1], precision[k]);
  }
  double ap = 0.0;
  double prev_recall = 0.0;
  for (std::size_t k = 0; k < ranked.size(); ++k) {
    ap += (recall[k] - prev_recall) * precision[k];
    prev_recall = recall[k];
  }
  return ap * 100.0;
}

std::vector<double> default_ar_thresholds() {
  std::vector<double> t;
  for (int i = 0; i < 10; ++i) t.push_back(0.5 + 0.05 * i);
  return t;
}

double ar_at(std::span<const RecordEvents> records, std::size_t cap,
             std::span<const double> iou_thresholds) {
  if (iou_thresholds.empty()) throw Error(ErrorCode::kInvalidArgument, "no IoU thresholds");
  double sum = 0.0;
  std::size_t counted = 0;
  for (const auto& rec : records) {
    if (rec.ground_truth.empty()) continue;
    ++counted;
    std::vector<LocalizationEvent> top = rec.proposals;
    std::stable_sort(top.begin(), top.end(), [](const LocalizationEvent& a, const LocalizationEvent& b) {
      if (a.confidence != b.confidence) return a.confidence > b.confidence;
      return a.start_chunk < b.start_chunk;
    });
    if (top.size() > cap) top.resize(cap);
    double recall_sum = 0.0;
    for (double tau : iou_thresholds) {
      const auto hits = greedy_match(top, rec.ground_truth, tau);
      const auto matched = std::count(hits.begin(), hits.end(), true);
      recall_sum += static_cast<double>(matched) / static_cast<double>(rec.ground_truth.size());
    }
    sum += recall_sum / static_cast<double>(iou_thresholds.size());
  }
  if (counted == 0) return 0.0;
  return sum / static_cast<double>(counted) * 100.0;
}

double ar_at(std::span<const RecordEvents> records, std::size_t cap) {
  const auto t = default_ar_thresholds();
  return ar_at(records, cap, t);
}

ApArReport compute_ap_ar(std::span<const RecordEvents> records, std::span<const double> taus,
                         std::span<const std::size_t> caps) {
  static const double kTaus[] = {0.25, 0.5, 0.75, 0.95};
  static const std::size_t kCaps[] = {100, 50, 20, 10};
  if (taus.empty()) taus = kTaus;
  if (caps.empty()) caps = kCaps;
  ApArReport report;
  for (double tau : taus) report.ap.emplace_back(tau, ap_at(records, tau));
  for (std::size_t cap : caps) report.ar.emplace_back(cap, ar_at(records, cap));
  return report;
}

std::vector<RecordEvents> build_record_events(const ScoreFile& window_scores,
                                              const Manifest& window_manifest,
                                              const AnnotationFile& annotations,
                                              double resolution_s, double threshold) {
  std::unordered_map<std::string_view, double> score_of;
  for (const auto& s : window_scores.scores) score_of.emplace(s.trial_id, s.score);

  std::unordered_map<std::string, std::vector<WindowScore>> windows_of;
  for (const auto& e : window_manifest.entries) {
    if (!e.parent || !e.start_sample || !e.end_sample) {
      throw Error(ErrorCode::kParseError,
                  "window manifest entry '" + e.id + "' lacks parent/start/end");
    }
    auto it = score_of.find(e.id);
    if (it == score_of.end()) throw Error(ErrorCode::kMissingTrial, "no score for trial '" + e.id + "'");
    windows_of[*e.parent].push_back(WindowScore{*e.start_sample, *e.end_sample, it->second});
  }

  std::vector<RecordEvents> out;
  out.reserve(annotations.records.size());
  for (const auto& rec : annotations.records) {
    const ChunkGrid grid = make_grid(rec.num_samples, resolution_s);
    RecordEvents ev;
    ev.record_id = rec.longform_id;
    ev.ground_truth = ground_truth_events(rasterize_labels(rec.segments, grid));
    if (auto it = windows_of.find(rec.longform_id); it != windows_of.end()) {
      ev.proposals = extract_proposals(rasterize_scores(it->second, grid), threshold);
    }
    out.push_back(std::move(ev));
  }
  return out;
}

LocalizationReport evaluate_localization(const ScoreFile& eval_scores,
                                         const Manifest& eval_manifest,
                                         const ScoreFile& dev_scores,
                                         const Manifest& dev_manifest,
                                         const AnnotationFile* eval_annotations,
                                         const LocalizationOptions& options) {
  LocalizationReport report;
  report.detection = evaluate_detection(eval_scores, eval_manifest, dev_scores, dev_manifest);
  report.binarize_threshold = options.binarize_threshold.value_or(report.detection.operating_threshold);
  report.resolution_s = options.resolution_s;
  if (options.compute_ap_ar) {
    if (eval_annotations == nullptr) {
      throw Error(ErrorCode::kInvalidArgument, "AP/AR needs the evaluation annotation file");
    }
    const auto records = build_record_events(eval_scores, eval_manifest, *eval_annotations,
                                             options.resolution_s, report.binarize_threshold);
    report.records = records.size();
    for (const auto& r : records) {
      report.ground_truth_events += r.ground_truth.size();
      report.proposals += r.proposals.size();
    }
    report.ap_ar = compute_ap_ar(records);
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::json detection_json(const DetectionReport& r) {
  return nlohmann::json{{"eer_percent", r.eer_percent},
                        {"eer_threshold", r.eer_threshold},
                        {"operating_threshold", r.operating_threshold},
                        {"hter_percent", r.hter_percent},
                        {"far_percent", r.far_percent},
                        {"frr_percent", r.frr_percent},
                        {"eval_bonafide", r.eval_bonafide},
                        {"eval_spoofed", r.eval_spoofed},
                        {"dev_bonafide", r.dev_bonafide},
                        {"dev_spoofed", r.dev_spoofed}};
}

std::string fmt_row(const char* name, double value, const char* unit) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%-22s %12.4f %s\n", name, value, unit);
  return buf;
}

}  // namespace

std::string report_to_json(const DetectionReport& report) {
  return nlohmann::json{{"detection", detection_json(report)}}.dump(2);
}

std::string report_to_json(const LocalizationReport& report) {
  nlohmann::json j{{"detection", detection_json(report.detection)},
                   {"binarize_threshold", report.binarize_threshold},
                   {"resolution_s", report.resolution_s}};
  if (report.ap_ar) {
    nlohmann::json ap = nlohmann::json::object();
    for (const auto& [tau, v] : report.ap_ar->ap) {
      char key[16];
      std::snprintf(key, sizeof key, "%.2f", tau);
      ap[key] = v;
    }
    nlohmann::json ar = nlohmann::json::object();
    for (const auto& [cap, v] : report.ap_ar->ar) ar[std::to_string(cap)] = v;
    j["ap"] = ap;
    j["ar"] = ar;
    j["records"] = report.records;
    j["ground_truth_events"] = report.ground_truth_events;
    j["proposals"] = report.proposals;
  }
  return j.dump(2);
}

std::string report_to_text(const DetectionReport& r) {
  std::string out;
  out += fmt_row("EER", r.eer_percent, "%");
  out += fmt_row("HTER", r.hter_percent, "%");
  out += fmt_row("  FAR at dev threshold", r.far_percent, "%");
  out += fmt_row("  FRR at dev threshold", r.frr_percent, "%");
  out += fmt_row("eval EER threshold", r.eer_threshold, "");
  out += fmt_row("dev EER threshold", r.operating_threshold, "");
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-22s %12zu / %zu\n%-22s %12zu / %zu\n", "eval bonafide/spoofed",
                r.eval_bonafide, r.eval_spoofed, "dev bonafide/spoofed", r.dev_bonafide,
                r.dev_spoofed);
  out += buf;
  return out;
}

std::string report_to_text(const LocalizationReport& r) {
  std::string out = report_to_text(r.detection);
  out += fmt_row("binarize threshold", r.binarize_threshold, "");
  out += fmt_row("resolution", r.resolution_s, "s");
  if (r.ap_ar) {
    char name[32];
    for (const auto& [tau, v] : r.ap_ar->ap) {
      std::snprintf(name, sizeof name, "AP@%.2f", tau);
      out += fmt_row(name, v, "");
    }
    for (const auto& [cap, v] : r.ap_ar->ar) {
      std::snprintf(name, sizeof name, "AR@%zu", cap);
      out += fmt_row(name, v, "");
    }
  }
  return out;
}

}  // namespace longspoof
