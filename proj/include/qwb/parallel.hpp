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

#include <cstddef>

namespace qwb {

/// Caps the OpenMP worker count used by every parallel kernel. n <= 0 restores
/// the runtime default.
void set_num_threads(int n);
int num_threads();

/// Reductions are summed in blocks of this many elements; block partials are
/// combined in ascending order, so results do not depend on the thread count.
inline constexpr std::size_t kReduceBlock = 4096;

}  // namespace qwb
