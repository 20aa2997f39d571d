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

#include "longspoof/protocol.hpp"

#include <unordered_set>

#include <nlohmann/json.hpp>

#include "longspoof/errors.hpp"

namespace longspoof {
namespace {

using nlohmann::json;

json noise_to_json(const NoiseAssignment& noise) {
  if (!noise) return nullptr;
  return json{{"category", std::string(to_string(noise->category))},
              {"snr_db", noise->snr_db},
              {"clip", noise->clip_id},
              {"offset", noise->offset}};
}

NoiseAssignment noise_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  AppliedNoise n;
  n.category = parse_noise_category(j.at("category").get<std::string>());
  n.snr_db = j.at("snr_db").get<double>();
  n.clip_id = j.at("clip").get<std::string>();
  n.offset = j.at("offset").get<std::uint64_t>();
  return n;
}

}  // namespace

AnnotationRecord annotation_of(const LongFormRecord& record) {
  return AnnotationRecord{record.longform_id, record.utterance_label,
                          static_cast<std::int64_t>(record.audio.size()), record.annotations};
}

const AnnotationRecord* AnnotationFile::find(std::string_view id) const {
  for (const auto& r : records) {
    if (r.longform_id == id) return &r;
  }
  return nullptr;
}

std::string check_annotation(const AnnotationRecord& record) {
  if (record.segments.empty()) return record.longform_id + ": no segments";
  std::int64_t cursor = 0;
  for (const auto& s : record.segments) {
    if (s.start_sample != cursor) return record.longform_id + ": gap or overlap at sample " +
                                         std::to_string(cursor);
    if (s.end_sample <= s.start_sample) return record.longform_id + ": empty segment";
    cursor = s.end_sample;
  }
  if (cursor != record.num_samples) {
    return record.longform_id + ": segments end at " + std::to_string(cursor) + " but record has " +
           std::to_string(record.num_samples) + " samples";
  }
  if (derive_utterance_label(record.segments) != record.utterance_label) {
    return record.longform_id + ": utterance label disagrees with segments";
  }
  return {};
}

std::string annotations_to_jsonl(const AnnotationFile& file) {
  std::string out;
  json meta{{"kind", file.metadata.kind},
            {"seed", file.metadata.seed},
            {"config_hash", file.metadata.config_hash},
            {"tool_version", file.metadata.tool_version},
            {"sample_rate", file.metadata.sample_rate}};
  out += json{{"metadata", meta}}.dump();
  out += '\n';
  for (const auto& r : file.records) {
    json segs = json::array();
    for (const auto& s : r.segments) {
      segs.push_back(json{{"start", s.start_sample},
                          {"end", s.end_sample},
                          {"label", std::string(to_string(s.label))},
                          {"source", s.source_id},
                          {"noise", noise_to_json(s.noise)}});
    }
    json j{{"id", r.longform_id},
           {"label", std::string(to_string(r.utterance_label))},
           {"sample_rate", file.metadata.sample_rate},
           {"num_samples", r.num_samples},
           {"segments", std::move(segs)}};
    out += j.dump();
    out += '\n';
  }
  return out;
}

AnnotationFile annotations_from_jsonl(std::string_view text, std::string_view source_name) {
  AnnotationFile file;
  file.metadata.kind = "annotation";
  std::unordered_set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    const std::string where = std::string(source_name) + ":" + std::to_string(line_no);
    try {
      const json j = json::parse(line);
      if (j.contains("metadata")) {
        const json& meta = j.at("metadata");
        file.metadata.kind = meta.value("kind", std::string("annotation"));
        file.metadata.seed = meta.value("seed", std::uint64_t{0});
        file.metadata.config_hash = meta.value("config_hash", std::string());
        file.metadata.tool_version = meta.value("tool_version", std::string());
        file.metadata.sample_rate = meta.value("sample_rate", 16000);
        continue;
      }
      AnnotationRecord r;
      r.longform_id = j.at("id").get<std::string>();
      r.utterance_label = parse_label(j.at("label").get<std::string>());
      r.num_samples = j.at("num_samples").get<std::int64_t>();
      if (j.value("sample_rate", 16000) != kSampleRate) {
        throw Error(ErrorCode::kParseError, "sample_rate must be 16000");
      }
      for (const auto& s : j.at("segments")) {
        SegmentAnnotation a;
        a.start_sample = s.at("start").get<std::int64_t>();
        a.end_sample = s.at("end").get<std::int64_t>();
        a.label = parse_label(s.at("label").get<std::string>());
        a.source_id = s.value("source", std::string());
        a.noise = s.contains("noise") ? noise_from_json(s.at("noise")) : std::nullopt;
        r.segments.push_back(std::move(a));
      }
      if (auto problem = check_annotation(r); !problem.empty()) {
        throw Error(ErrorCode::kParseError, problem);
      }
      if (!seen.insert(r.longform_id).second) {
        throw Error(ErrorCode::kDuplicateId, "duplicate id '" + r.longform_id + "'");
      }
      file.records.push_back(std::move(r));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParseError, where + ": " + e.what());
    } catch (const Error& e) {
      throw Error(e.code(), where + ": " + e.detail());
    }
  }
  return file;
}

void write_annotations(const AnnotationFile& file, const std::filesystem::path& path) {
  write_file_atomic(path, annotations_to_jsonl(file));
}

AnnotationFile read_annotations(const std::filesystem::path& path) {
  return annotations_from_jsonl(read_file(path), path.string());
}

RngStreams derive_rng_streams(std::uint64_t seed) { return RngStreams{master_stream(seed)}; }

}  // namespace longspoof
