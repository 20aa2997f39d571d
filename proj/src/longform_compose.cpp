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

#include "longspoof/longform_compose.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>

#include "longspoof/errors.hpp"

namespace longspoof {
namespace {

struct LabelPools {
  std::vector<const ManifestEntry*> bonafide;
  std::vector<const ManifestEntry*> spoofed;

  const std::vector<const ManifestEntry*>& of(Label label) const {
    return label == Label::kBonafide ? bonafide : spoofed;
  }
};

const ManifestEntry* pick(RngStream& rng, const std::vector<const ManifestEntry*>& pool) {
  return pool[static_cast<std::size_t>(rng.below(pool.size()))];
}

}  // namespace

std::string_view to_string(SpeakerMode mode) {
  return mode == SpeakerMode::kMulti ? "multi" : "single";
}

SpeakerMode parse_speaker_mode(std::string_view text) {
  if (text == "multi") return SpeakerMode::kMulti;
  if (text == "single") return SpeakerMode::kSingle;
  throw Error(ErrorCode::kParseError, "unknown speaker mode '" + std::string(text) + "'");
}

std::map<Partition, PartitionTargets> reference_targets() {
  return {{Partition::kTrain, {2580, 22800}},
          {Partition::kDev, {1000, 1000}},
          {Partition::kEval, {1000, 1000}}};
}

std::string longform_id(Partition partition, std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "_long_%06zu", index);
  return std::string(to_string(partition)) + buf;
}

std::vector<CompositionPlan> plan_dataset(const Manifest& sources,
                                          const std::map<Partition, PartitionTargets>& targets,
                                          const PlanOptions& options, const NoisePool* pool,
                                          const RngStream& rng) {
  const CompositionConfig& comp = options.composition;
  if (comp.segments_per_long < 1 || comp.bonafide_in_spoofed < 0 ||
      comp.bonafide_in_spoofed >= comp.segments_per_long) {
    throw Error(ErrorCode::kInvalidArgument,
                "composition needs segments >= 1 and 0 <= bonafide_in_spoofed < segments");
  }
  if (!(options.target_db_min <= options.target_db_max)) {
    throw Error(ErrorCode::kInvalidArgument, "target_db_min must not exceed target_db_max");
  }

  std::vector<CompositionPlan> plans;
  for (const auto& [partition, target] : targets) {
    if (target.bonafide + target.spoofed == 0) continue;
    const std::string pname(to_string(partition));

    LabelPools all;
    std::map<std::string, LabelPools> by_speaker;  // ordered for determinism
    for (const auto& e : sources.entries) {
      if (e.partition != partition) continue;
      (e.label == Label::kBonafide ? all.bonafide : all.spoofed).push_back(&e);
      auto& sp = by_speaker[e.speaker];
      (e.label == Label::kBonafide ? sp.bonafide : sp.spoofed).push_back(&e);
    }

    std::vector<const std::string*> eligible_speakers;
    if (options.mode == SpeakerMode::kSingle) {
      for (const auto& [speaker, pools] : by_speaker) {
        if (!pools.bonafide.empty() && !pools.spoofed.empty()) eligible_speakers.push_back(&speaker);
      }
      if (eligible_speakers.empty()) {
        throw Error(ErrorCode::kInsufficientSources,
                    pname + ": no speaker has both bonafide and spoofed sources");
      }
    } else {
      if (all.bonafide.empty()) {
        throw Error(ErrorCode::kInsufficientSources, pname + ": no bonafide sources");
      }
      if (target.spoofed > 0 && all.spoofed.empty()) {
        throw Error(ErrorCode::kInsufficientSources, pname + ": no spoofed sources");
      }
    }

    const auto pindex = static_cast<std::uint64_t>(partition);
    RngStream plan_rng = rng.derive("plan", pindex);
    const RngStream noise_root = rng.derive("noise", pindex);
    const RngStream loudness_root = rng.derive("loudness", pindex);

    const std::size_t total = target.bonafide + target.spoofed;
    for (std::size_t i = 0; i < total; ++i) {
      CompositionPlan plan;
      plan.longform_id = longform_id(partition, i);
      plan.partition = partition;
      plan.mode = options.mode;
      plan.utterance_label = i < target.bonafide ? Label::kBonafide : Label::kSpoofed;

      const LabelPools* pools = &all;
      if (options.mode == SpeakerMode::kSingle) {
        const std::string& speaker =
            *eligible_speakers[static_cast<std::size_t>(plan_rng.below(eligible_speakers.size()))];
        plan.speaker_id = speaker;
        pools = &by_speaker.at(speaker);
      }

      std::vector<Label> order(static_cast<std::size_t>(comp.segments_per_long), Label::kBonafide);
      if (plan.utterance_label == Label::kSpoofed) {
        std::fill(order.begin() + comp.bonafide_in_spoofed, order.end(), Label::kSpoofed);
        plan_rng.shuffle(std::span<Label>(order));
      }

      RngStream noise_rng = noise_root.derive("record", i);
      RngStream loudness_rng = loudness_root.derive("record", i);
      plan.segments.reserve(order.size());
      for (Label label : order) {
        SegmentPlan seg;
        seg.label = label;
        seg.source_id = pick(plan_rng, pools->of(label))->id;
        seg.target_db = loudness_rng.uniform(options.target_db_min, options.target_db_max);
        seg.noise = draw_assignment(noise_rng, options.noise, pool);
        plan.segments.push_back(std::move(seg));
      }
      plans.push_back(std::move(plan));
    }
  }
  return plans;
}

std::string check_plan(const CompositionPlan& plan, const CompositionConfig& composition,
                       const Manifest* sources) {
  if (static_cast<int>(plan.segments.size()) != composition.segments_per_long) {
    return plan.longform_id + ": has " + std::to_string(plan.segments.size()) + " segments";
  }
  const auto n_bona = std::count_if(plan.segments.begin(), plan.segments.end(),
                                    [](const SegmentPlan& s) { return s.label == Label::kBonafide; });
  if (plan.utterance_label == Label::kBonafide && n_bona != composition.segments_per_long) {
    return plan.longform_id + ": bonafide record with spoofed segments";
  }
  if (plan.utterance_label == Label::kSpoofed && n_bona != composition.bonafide_in_spoofed) {
    return plan.longform_id + ": spoofed record with " + std::to_string(n_bona) +
           " bonafide segments";
  }
  if ((plan.mode == SpeakerMode::kSingle) != plan.speaker_id.has_value()) {
    return plan.longform_id + ": speaker_id must be set iff single-speaker";
  }
  if (sources != nullptr) {
    std::unordered_map<std::string, const ManifestEntry*> index;
    for (const auto& e : sources->entries) index.emplace(e.id, &e);
    for (const auto& s : plan.segments) {
      auto it = index.find(s.source_id);
      if (it == index.end()) return plan.longform_id + ": unknown source " + s.source_id;
      if (it->second->label != s.label) return plan.longform_id + ": label mismatch " + s.source_id;
      if (it->second->partition != plan.partition) {
        return plan.longform_id + ": source from another partition " + s.source_id;
      }
      if (plan.speaker_id && it->second->speaker != *plan.speaker_id) {
        return plan.longform_id + ": speaker mismatch " + s.source_id;
      }
    }
  }
  return {};
}

LongFormRecord render(const CompositionPlan& plan, const AudioSource& sources,
                      const NoisePool* pool, const TrimOptions& trim,
                      std::vector<SegmentTrace>* trace) {
  LongFormRecord rec;
  rec.longform_id = plan.longform_id;
  rec.audio.sample_rate = kSampleRate;
  if (trace != nullptr) trace->clear();

  std::int64_t cursor = 0;
  for (std::size_t i = 0; i < plan.segments.size(); ++i) {
    const SegmentPlan& seg = plan.segments[i];
    try {
      const auto source = sources.load(seg.source_id);
      auto [trimmed, trim_report] = trim_silence(*source, trim);
      auto [normalized, loudness] = normalize_loudness(trimmed, seg.target_db);
      double alpha = 0.0;
      AudioBuffer mixed = apply_noise(normalized, seg.noise, pool, &alpha);

      SegmentAnnotation ann;
      ann.start_sample = cursor;
      ann.end_sample = cursor + static_cast<std::int64_t>(mixed.size());
      ann.label = seg.label;
      ann.source_id = seg.source_id;
      ann.noise = seg.noise;
      cursor = ann.end_sample;
      rec.annotations.push_back(std::move(ann));
      rec.audio.samples.insert(rec.audio.samples.end(), mixed.samples.begin(), mixed.samples.end());

      if (trace != nullptr) {
        trace->push_back(SegmentTrace{std::move(normalized), trim_report, loudness, alpha});
      }
    } catch (const Error& e) {
      throw Error(e.code(), plan.longform_id + " segment " + std::to_string(i) + " (" +
                                seg.source_id + "): " + e.detail());
    }
  }
  rec.utterance_label = derive_utterance_label(rec.annotations);
  return rec;
}

Label derive_utterance_label(std::span<const SegmentAnnotation> annotations) {
  const bool any_spoof = std::any_of(annotations.begin(), annotations.end(),
                                     [](const SegmentAnnotation& a) { return a.label == Label::kSpoofed; });
  return any_spoof ? Label::kSpoofed : Label::kBonafide;
}

}  // namespace longspoof
