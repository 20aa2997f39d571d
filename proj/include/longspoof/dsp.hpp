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

#include <cmath>
#include <span>

#include "longspoof/kernels.hpp"

namespace longspoof {

inline double rms(std::span<const float> x) {
  if (x.empty()) return 0.0;
  return std::sqrt(kernels::active_table().sum_squares(x) / static_cast<double>(x.size()));
}

inline double db_to_amplitude(double db) { return std::pow(10.0, db / 20.0); }

inline double amplitude_to_db(double amplitude) { return 20.0 * std::log10(amplitude); }

}  // namespace longspoof
