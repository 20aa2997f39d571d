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

#include <array>
#include <string_view>

namespace longspoof {

enum class Label { kBonafide, kSpoofed };

enum class Partition { kTrain, kDev, kEval };

inline constexpr std::array<Partition, 3> kAllPartitions = {Partition::kTrain, Partition::kDev,
                                                            Partition::kEval};

std::string_view to_string(Label label);
std::string_view to_string(Partition partition);

/// Parse the lowercase wire names ("bonafide"/"spoofed", "train"/"dev"/"eval").
/// Throw kParseError on anything else.
Label parse_label(std::string_view text);
Partition parse_partition(std::string_view text);

}  // namespace longspoof
