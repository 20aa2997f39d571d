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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "longspoof/longform_compose.hpp"
#include "longspoof/manifest.hpp"
#include "longspoof/protocol.hpp"
#include "longspoof/scoring.hpp"

namespace longspoof {

// ---------------------------------------------------------------------------
// Detection: DET sweep, EER, HTER
//
// A trial is accepted as bonafide iff score >= threshold.
//   FAR(t) = #spoofed with score >= t / #spoofed
//   FRR(t) = #bonafide with score <  t / #bonafide
// ---------------------------------------------------------------------------

struct DetPoint {
  double threshold = 0.0;
  double far = 0.0;
  double frr = 0.0;
};

/// One point per distinct score (ascending) plus a final +inf threshold, so the
/// curve runs from (FAR, FRR) = (1, 0) to (0, 1).
struct DetCurve {
  std::vector<DetPoint> points;
};

DetCurve det_curve(std::span<const double> bonafide, std::span<const double> spoofed);

struct EerResult {
  double eer_percent = 0.0;
  double threshold = 0.0;
};

/// Crossing of FAR and FRR, linearly interpolated between adjacent sweep
/// points; the threshold is interpolated the same way. Throws kOneClassOnly
/// when either class is empty.
EerResult eer(std::span<const double> bonafide, std::span<const double> spoofed);

struct ErrorRates {
  double far = 0.0;
  double frr = 0.0;
};

ErrorRates error_rates_at(std::span<const double> bonafide, std::span<const double> spoofed,
                          double threshold);

/// (FAR + FRR) / 2 at a fixed threshold, in percent.
double hter(std::span<const double> bonafide, std::span<const double> spoofed, double threshold);

struct LabeledScores {
  std::vector<double> bonafide;
  std::vector<double> spoofed;
};

/// Pairs scores with manifest labels. The ids must biject: throws
/// kMissingTrial for a manifest entry without a score, kUnknownTrial for a
/// score without an entry, and kConfigHashMismatch when both carry a config
/// hash and they differ.
LabeledScores join_scores(const ScoreFile& scores, const Manifest& manifest);

struct DetectionReport {
  double eer_percent = 0.0;          // on the evaluation set
  double eer_threshold = 0.0;        // evaluation-set EER threshold
  double operating_threshold = 0.0;  // development-set EER threshold
  double hter_percent = 0.0;         // evaluation set at operating_threshold
  double far_percent = 0.0;          // components of hter
  double frr_percent = 0.0;
  std::size_t eval_bonafide = 0;
  std::size_t eval_spoofed = 0;
  std::size_t dev_bonafide = 0;
  std::size_t dev_spoofed = 0;
};

/// EER on eval, threshold from the dev EER, HTER on eval at that threshold.
/// Works the same for utterance-level and window-level trials.
DetectionReport evaluate_detection(const ScoreFile& eval_scores, const Manifest& eval_manifest,
                                   const ScoreFile& dev_scores, const Manifest& dev_manifest);

DetectionReport evaluate_detection(const LabeledScores& eval, const LabeledScores& dev);

// ---------------------------------------------------------------------------
// Localization on a discrete chunk grid
// ---------------------------------------------------------------------------

inline constexpr double kDefaultResolution = 0.04;

/// Chunk i covers samples [boundary[i], boundary[i+1]); there are
/// floor(duration / resolution) chunks and any remainder is ignored.
struct ChunkGrid {
  double resolution_s = kDefaultResolution;
  std::vector<std::int64_t> boundaries;  // size num_chunks + 1

  std::size_t num_chunks() const { return boundaries.empty() ? 0 : boundaries.size() - 1; }
};

ChunkGrid make_grid(std::int64_t num_samples, double resolution_s = kDefaultResolution);

/// 1 where a chunk overlaps a spoofed annotation by at least one sample.
std::vector<std::uint8_t> rasterize_labels(std::span<const SegmentAnnotation> annotations,
                                           const ChunkGrid& grid);

struct WindowScore {
  std::int64_t start_sample = 0;
  std::int64_t end_sample = 0;
  double score = 0.0;
};

/// Score of the (earliest-starting) window covering each chunk's midpoint;
/// NaN for chunks no window covers, which never become proposals.
std::vector<double> rasterize_scores(std::span<const WindowScore> windows, const ChunkGrid& grid);

/// Half-open chunk interval [start_chunk, end_chunk).
struct LocalizationEvent {
  std::int64_t start_chunk = 0;
  std::int64_t end_chunk = 0;
  double confidence = 1.0;

  double start_s(double resolution_s) const { return start_chunk * resolution_s; }
  double end_s(double resolution_s) const { return end_chunk * resolution_s; }
  bool operator==(const LocalizationEvent&) const = default;
};

/// Maximal runs of chunks with score < threshold (the spoof side). Confidence
/// is the run's mean of (1 - score). Sorted by confidence, highest first,
/// ties by start chunk.
std::vector<LocalizationEvent> extract_proposals(std::span<const double> chunk_scores,
                                                 double threshold);

/// Maximal runs of spoofed chunks, confidence 1.
std::vector<LocalizationEvent> ground_truth_events(std::span<const std::uint8_t> chunk_labels);

double iou(const LocalizationEvent& a, const LocalizationEvent& b);

struct RecordEvents {
  std::string record_id;
  std::vector<LocalizationEvent> proposals;
  std::vector<LocalizationEvent> ground_truth;
};

/// Greedy one-to-one matching inside one record. Proposals are taken in the
/// given order; each takes the unmatched ground-truth event with the highest
/// IoU (lowest index on ties) if that IoU >= tau. Returns a flag per proposal.
std::vector<bool> greedy_match(std::span<const LocalizationEvent> ordered_proposals,
                               std::span<const LocalizationEvent> ground_truth, double tau);

/// Proposals of every record ranked together by confidence (ties: record
/// order, then start), matched greedily per record; AP is the area under the
/// all-point-interpolated precision/recall curve, in percent. Zero when there
/// is no ground truth.
double ap_at(std::span<const RecordEvents> records, double tau);

/// IoU thresholds 0.50, 0.55, ..., 0.95.
std::vector<double> default_ar_thresholds();

/// Per record, the top `cap` proposals by confidence are matched at each IoU
/// threshold; recall is averaged over thresholds, then over records with at
/// least one ground-truth event. Percent.
double ar_at(std::span<const RecordEvents> records, std::size_t cap,
             std::span<const double> iou_thresholds);
double ar_at(std::span<const RecordEvents> records, std::size_t cap);

struct ApArReport {
  std::vector<std::pair<double, double>> ap;       // (IoU threshold, AP %)
  std::vector<std::pair<std::size_t, double>> ar;  // (cap, AR %)
};

ApArReport compute_ap_ar(std::span<const RecordEvents> records,
                         std::span<const double> taus = std::span<const double>(),
                         std::span<const std::size_t> caps = std::span<const std::size_t>());

struct LocalizationOptions {
  double resolution_s = kDefaultResolution;
  std::optional<double> binarize_threshold;  // default: dev EER threshold
  bool compute_ap_ar = false;
};

struct LocalizationReport {
  DetectionReport detection;  // window-level EER/HTER
  double binarize_threshold = 0.0;
  double resolution_s = kDefaultResolution;
  std::optional<ApArReport> ap_ar;
  std::size_t records = 0;
  std::size_t ground_truth_events = 0;
  std::size_t proposals = 0;
};

/// Builds RecordEvents for every annotated record from window scores: the
/// manifest supplies each window's parent and sample extent.
std::vector<RecordEvents> build_record_events(const ScoreFile& window_scores,
                                              const Manifest& window_manifest,
                                              const AnnotationFile& annotations,
                                              double resolution_s, double threshold);

LocalizationReport evaluate_localization(const ScoreFile& eval_scores,
                                         const Manifest& eval_manifest,
                                         const ScoreFile& dev_scores,
                                         const Manifest& dev_manifest,
                                         const AnnotationFile* eval_annotations,
                                         const LocalizationOptions& options = {});

/// Machine-readable and aligned-text renderings of the reports.
std::string report_to_json(const DetectionReport& report);
std::string report_to_json(const LocalizationReport& report);
std::string report_to_text(const DetectionReport& report);
std::string report_to_text(const LocalizationReport& report);

}  // namespace longspoof
