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

#include "longspoof/labels.hpp"

#include <string>

#include "longspoof/errors.hpp"

namespace longspoof {

std::string_view to_string(Label label) {
  return label == Label::kBonafide ? "bonafide" : "spoofed";
}

std::string_view to_string(Partition partition) {
  switch (partition) {
    case Partition::kTrain: return "train";
    case Partition::kDev: return "dev";
    case Partition::kEval: return "eval";
  }
  return "train";
}

Label parse_label(std::string_view text) {
  if (text == "bonafide") return Label::kBonafide;
  if (text == "spoofed") return Label::kSpoofed;
  throw Error(ErrorCode::kParseError, "unknown label '" + std::string(text) + "'");
}

Partition parse_partition(std::string_view text) {
  if (text == "train") return Partition::kTrain;
  if (text == "dev") return Partition::kDev;
  if (text == "eval") return Partition::kEval;
  throw Error(ErrorCode::kParseError, "unknown partition '" + std::string(text) + "'");
}

}  // namespace longspoof
