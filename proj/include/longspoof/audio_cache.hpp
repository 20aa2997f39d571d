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
#include <filesystem>
#include <list>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include "longspoof/audio_io.hpp"

namespace longspoof {

/// Thread-safe read-through cache of decoded WAV files, evicting least
/// recently used entries once the decoded size exceeds the byte budget.
/// Returned buffers stay valid after eviction (shared ownership).
class AudioCache {
 public:
  explicit AudioCache(std::size_t byte_budget = std::size_t{512} << 20) : budget_(byte_budget) {}

  AudioCache(const AudioCache&) = delete;
  AudioCache& operator=(const AudioCache&) = delete;

  std::shared_ptr<const AudioBuffer> load(const std::filesystem::path& path);

  std::size_t resident_bytes() const;

 private:
  struct Slot {
    std::shared_ptr<const AudioBuffer> audio;
    std::list<std::string>::iterator lru_pos;
  };

  mutable std::mutex mu_;
  std::size_t budget_;
  std::size_t bytes_ = 0;
  std::list<std::string> lru_;  // front = most recent
  std::unordered_map<std::string, Slot> slots_;
};

/// Where the renderer gets source audio from, keyed by source id.
class AudioSource {
 public:
  virtual ~AudioSource() = default;
  virtual std::shared_ptr<const AudioBuffer> load(const std::string& id) const = 0;
};

/// Sources held in memory (tests, synthetic data).
class InMemoryAudioSource final : public AudioSource {
 public:
  void add(const std::string& id, AudioBuffer audio);
  std::shared_ptr<const AudioBuffer> load(const std::string& id) const override;
  std::size_t size() const { return clips_.size(); }

 private:
  std::unordered_map<std::string, std::shared_ptr<const AudioBuffer>> clips_;
};

/// Sources read from WAV files; ids map to paths relative to a data root.
class FileAudioSource final : public AudioSource {
 public:
  FileAudioSource(std::filesystem::path root, std::size_t cache_bytes = std::size_t{256} << 20)
      : root_(std::move(root)), cache_(std::make_unique<AudioCache>(cache_bytes)) {}

  void add(const std::string& id, const std::filesystem::path& relative_path);
  std::shared_ptr<const AudioBuffer> load(const std::string& id) const override;

 private:
  std::filesystem::path root_;
  std::unordered_map<std::string, std::filesystem::path> paths_;
  std::unique_ptr<AudioCache> cache_;
};

}  // namespace longspoof
