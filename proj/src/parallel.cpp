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

#include "qwb/parallel.hpp"

#include <omp.h>

#include "qwb/errors.hpp"

#include <string>

namespace qwb {

namespace {
int g_default_threads = -1;
}

void set_num_threads(int n) {
  if (g_default_threads < 0) g_default_threads = omp_get_max_threads();
  omp_set_num_threads(n > 0 ? n : g_default_threads);
}

int num_threads() { return omp_get_max_threads(); }

void check_qubit_count(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": need at least one qubit");
  if (n > kMaxQubits)
    throw ResourceLimit(std::string(what) + ": " + std::to_string(n) + " qubits exceeds the limit of " +
                        std::to_string(kMaxQubits));
}

}  // namespace qwb
