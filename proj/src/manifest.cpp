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

#include "longspoof/manifest.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>
#include <unistd.h>

#include "longspoof/errors.hpp"
#include "longspoof/rng.hpp"

namespace longspoof {
namespace {

using nlohmann::json;

json entry_to_json(const ManifestEntry& e) {
  json j;
  j["id"] = e.id;
  j["path"] = e.path;
  j["speaker"] = e.speaker;
  j["label"] = std::string(to_string(e.label));
  j["partition"] = std::string(to_string(e.partition));
  if (e.parent) j["parent"] = *e.parent;
  if (e.start_sample) j["start"] = *e.start_sample;
  if (e.end_sample) j["end"] = *e.end_sample;
  if (e.num_samples) j["num_samples"] = *e.num_samples;
  return j;
}

ManifestEntry entry_from_json(const json& j) {
  ManifestEntry e;
  e.id = j.at("id").get<std::string>();
  e.path = j.value("path", std::string());
  e.speaker = j.value("speaker", std::string());
  e.label = parse_label(j.at("label").get<std::string>());
  e.partition = parse_partition(j.at("partition").get<std::string>());
  if (j.contains("parent")) e.parent = j.at("parent").get<std::string>();
  if (j.contains("start")) e.start_sample = j.at("start").get<std::int64_t>();
  if (j.contains("end")) e.end_sample = j.at("end").get<std::int64_t>();
  if (j.contains("num_samples")) e.num_samples = j.at("num_samples").get<std::int64_t>();
  return e;
}

}  // namespace

std::vector<ManifestEntry> Manifest::in_partition(Partition partition) const {
  std::vector<ManifestEntry> out;
  for (const auto& e : entries) {
    if (e.partition == partition) out.push_back(e);
  }
  return out;
}

std::string manifest_to_jsonl(const Manifest& manifest) {
  std::string out;
  json meta;
  meta["kind"] = manifest.metadata.kind;
  meta["seed"] = manifest.metadata.seed;
  meta["config_hash"] = manifest.metadata.config_hash;
  meta["tool_version"] = manifest.metadata.tool_version;
  meta["sample_rate"] = manifest.metadata.sample_rate;
  out += json{{"metadata", meta}}.dump();
  out += '\n';
  for (const auto& e : manifest.entries) {
    out += entry_to_json(e).dump();
    out += '\n';
  }
  return out;
}

Manifest manifest_from_jsonl(std::string_view text, std::string_view source_name) {
  Manifest m;
  std::unordered_set<std::string> seen;
  bool have_meta = false;
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
        if (have_meta) throw Error(ErrorCode::kParseError, "second metadata line");
        const json& meta = j.at("metadata");
        m.metadata.kind = meta.value("kind", std::string("source"));
        m.metadata.seed = meta.value("seed", std::uint64_t{0});
        m.metadata.config_hash = meta.value("config_hash", std::string());
        m.metadata.tool_version = meta.value("tool_version", std::string());
        m.metadata.sample_rate = meta.value("sample_rate", 16000);
        have_meta = true;
        continue;
      }
      ManifestEntry e = entry_from_json(j);
      if (!seen.insert(e.id).second) {
        throw Error(ErrorCode::kDuplicateId, "duplicate id '" + e.id + "'");
      }
      m.entries.push_back(std::move(e));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParseError, where + ": " + e.what());
    } catch (const Error& e) {
      throw Error(e.code(), where + ": " + e.detail());
    }
  }
  return m;
}

void write_manifest(const Manifest& manifest, const std::filesystem::path& path) {
  write_file_atomic(path, manifest_to_jsonl(manifest));
}

Manifest read_manifest(const std::filesystem::path& path) {
  return manifest_from_jsonl(read_file(path), path.string());
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  static std::atomic<std::uint64_t> counter{0};
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter.fetch_add(1));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIoFailure, "cannot write " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw Error(ErrorCode::kIoFailure, "short write to " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIoFailure, "cannot rename into " + path.string());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string hash_hex(std::string_view canonical) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(canonical)));
  return buf;
}

}  // namespace longspoof
