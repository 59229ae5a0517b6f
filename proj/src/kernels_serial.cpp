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

#include <cmath>

#include "qwb/kernels.hpp"

namespace qwb::kernels::serial {

namespace {
inline std::size_t insert_zero(std::size_t k, std::size_t mask) {
  return ((k & ~(mask - 1)) << 1) | (k & (mask - 1));
}
}  // namespace

void apply_1q(std::span<Complex> amps, int n, int qubit, const Mat2& m) {
  const std::size_t mask = qubit_mask(n, qubit);
  const std::size_t half = amps.size() / 2;
  for (std::size_t k = 0; k < half; ++k) {
    const std::size_t i0 = insert_zero(k, mask);
    const std::size_t i1 = i0 | mask;
    const Complex a = amps[i0];
    const Complex b = amps[i1];
    amps[i0] = m[0] * a + m[1] * b;
    amps[i1] = m[2] * a + m[3] * b;
  }
}

void apply_cx(std::span<Complex> amps, int n, int control, int target) {
  const std::size_t cm = qubit_mask(n, control);
  const std::size_t tm = qubit_mask(n, target);
  for (std::size_t b = 0; b < amps.size(); ++b)
    if ((b & cm) && !(b & tm)) std::swap(amps[b], amps[b | tm]);
}

void apply_cz(std::span<Complex> amps, int n, int q1, int q2) {
  const std::size_t both = qubit_mask(n, q1) | qubit_mask(n, q2);
  for (std::size_t b = 0; b < amps.size(); ++b)
    if ((b & both) == both) amps[b] = -amps[b];
}

void apply_rzz(std::span<Complex> amps, int n, int q1, int q2, double theta) {
  const std::size_t m1 = qubit_mask(n, q1);
  const std::size_t m2 = qubit_mask(n, q2);
  const Complex same = std::polar(1.0, -theta / 2);
  const Complex diff = std::conj(same);
  for (std::size_t b = 0; b < amps.size(); ++b)
    amps[b] *= (((b & m1) != 0) == ((b & m2) != 0)) ? same : diff;
}

void apply_diag_phase(std::span<Complex> amps, std::span<const double> energies, double gamma) {
  for (std::size_t b = 0; b < amps.size(); ++b) amps[b] *= std::polar(1.0, -gamma * energies[b]);
}

void apply_phase_table(std::span<Complex> amps, std::span<const Complex> phases) {
  for (std::size_t b = 0; b < amps.size(); ++b) amps[b] *= phases[b];
}

void apply_indexed_phase(std::span<Complex> amps, std::span<const std::uint32_t> level_of,
                         std::span<const Complex> level_phase) {
  for (std::size_t b = 0; b < amps.size(); ++b) amps[b] *= level_phase[level_of[b]];
}

void apply_rx_all(std::span<Complex> amps, int n, double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  const Mat2 rx{Complex(c, 0), Complex(0, -s), Complex(0, -s), Complex(c, 0)};
  for (int q = 0; q < n; ++q) apply_1q(amps, n, q, rx);
}

void probabilities(std::span<const Complex> amps, std::span<double> out) {
  for (std::size_t b = 0; b < amps.size(); ++b) out[b] = std::norm(amps[b]);
}

double expectation_diag(std::span<const Complex> amps, std::span<const double> energies) {
  double acc = 0.0;
  for (std::size_t b = 0; b < amps.size(); ++b) acc += std::norm(amps[b]) * energies[b];
  return acc;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  Complex acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

Complex diag_overlap(std::span<const Complex> a, std::span<const double> energies,
                     std::span<const Complex> b) {
  Complex acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * energies[i] * b[i];
  return acc;
}

Complex x_sum_overlap(std::span<const Complex> a, std::span<const Complex> b, int n) {
  Complex acc{};
  for (std::size_t i = 0; i < a.size(); ++i) {
    Complex flipped{};
    for (int q = 0; q < n; ++q) flipped += b[i ^ qubit_mask(n, q)];
    acc += std::conj(a[i]) * flipped;
  }
  return acc;
}

}  // namespace qwb::kernels::serial
