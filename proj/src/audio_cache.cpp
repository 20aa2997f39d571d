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

#include "longspoof/audio_cache.hpp"

#include "longspoof/errors.hpp"

namespace longspoof {

std::shared_ptr<const AudioBuffer> AudioCache::load(const std::filesystem::path& path) {
  const std::string key = path.string();
  {
    std::lock_guard lock(mu_);
    if (auto it = slots_.find(key); it != slots_.end()) {
      lru_.splice(lru_.begin(), lru_, it->second.lru_pos);
      return it->second.audio;
    }
  }
  // Decode outside the lock; two threads racing on one path both decode and
  // the second insert is dropped.
  auto audio = std::make_shared<const AudioBuffer>(load_wav(path));
  const std::size_t bytes = audio->samples.size() * sizeof(float);

  std::lock_guard lock(mu_);
  if (auto it = slots_.find(key); it != slots_.end()) return it->second.audio;
  lru_.push_front(key);
  slots_.emplace(key, Slot{audio, lru_.begin()});
  bytes_ += bytes;
  while (bytes_ > budget_ && lru_.size() > 1) {
    const std::string& victim = lru_.back();
    auto vit = slots_.find(victim);
    bytes_ -= vit->second.audio->samples.size() * sizeof(float);
    slots_.erase(vit);
    lru_.pop_back();
  }
  return audio;
}

std::size_t AudioCache::resident_bytes() const {
  std::lock_guard lock(mu_);
  return bytes_;
}

void InMemoryAudioSource::add(const std::string& id, AudioBuffer audio) {
  clips_[id] = std::make_shared<const AudioBuffer>(std::move(audio));
}

std::shared_ptr<const AudioBuffer> InMemoryAudioSource::load(const std::string& id) const {
  auto it = clips_.find(id);
  if (it == clips_.end()) throw Error(ErrorCode::kIoFailure, "no in-memory audio for '" + id + "'");
  return it->second;
}

void FileAudioSource::add(const std::string& id, const std::filesystem::path& relative_path) {
  paths_[id] = relative_path;
}

std::shared_ptr<const AudioBuffer> FileAudioSource::load(const std::string& id) const {
  auto it = paths_.find(id);
  if (it == paths_.end()) throw Error(ErrorCode::kIoFailure, "no path registered for '" + id + "'");
  const std::filesystem::path full =
      it->second.is_absolute() ? it->second : root_ / it->second;
  return cache_->load(full);
}

}  // namespace longspoof
