// Copyright 2026 The QWB Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <limits>

namespace qwb {

/// Coefficient of performance: p_star relative to uniform random guessing, p_star * 2^n.
double cop(double p_star, int n);

/// Returned by tts() when p_star == 0.
inline constexpr std::int64_t kTtsInfinite = std::numeric_limits<std::int64_t>::max();

/// Shots needed to see the target at least once with confidence alpha,
/// lambda * ceil(ln(1 - alpha) / ln(1 - p_star)).
std::int64_t tts(double p_star, double alpha = 0.99, std::int64_t lambda_per_shot = 1);

}  // namespace qwb
