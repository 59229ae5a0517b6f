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

#include "qwb/merit.hpp"

#include <cmath>
#include <stdexcept>

namespace qwb {

double cop(double p_star, int n) {
  if (!(p_star >= 0.0 && p_star <= 1.0)) throw std::invalid_argument("cop: probability outside [0, 1]");
  if (n < 0 || n > 62) throw std::invalid_argument("cop: bad qubit count");
  return p_star * std::ldexp(1.0, n);
}

std::int64_t tts(double p_star, double alpha, std::int64_t lambda_per_shot) {
  if (!(p_star >= 0.0 && p_star <= 1.0)) throw std::invalid_argument("tts: probability outside [0, 1]");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("tts: alpha outside (0, 1)");
  if (lambda_per_shot < 1) throw std::invalid_argument("tts: lambda must be >= 1");
  if (p_star == 0.0) return kTtsInfinite;
  if (p_star >= alpha) return lambda_per_shot;
  const double shots = std::ceil(std::log1p(-alpha) / std::log1p(-p_star));
  return lambda_per_shot * static_cast<std::int64_t>(shots);
}

}  // namespace qwb
