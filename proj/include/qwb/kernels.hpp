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

// Statevector and enumeration kernels. Every kernel exists twice: a plain
// serial reference in `kernels::serial` and an OpenMP version in
// `kernels::omp`. The library calls the OpenMP versions; tests check them
// against the serial ones and bench/bench_kernels.cpp times both.
//
// Bit layout: qubit q lives at bit (n - 1 - q) of the basis index, so qubit 0
// is the most significant bit.

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

#include "qwb/parallel.hpp"

namespace qwb::kernels {

using Complex = std::complex<double>;
using Mat2 = std::array<Complex, 4>;  // row-major [[m00, m01], [m10, m11]]

inline constexpr std::size_t qubit_mask(int n, int qubit) {
  return std::size_t{1} << (n - 1 - qubit);
}

#define QWB_KERNEL_DECLS                                                                           \
  void apply_1q(std::span<Complex> amps, int n, int qubit, const Mat2& m);                         \
  void apply_cx(std::span<Complex> amps, int n, int control, int target);                          \
  void apply_cz(std::span<Complex> amps, int n, int q1, int q2);                                   \
  void apply_rzz(std::span<Complex> amps, int n, int q1, int q2, double theta);                    \
  /* amp_b *= exp(-i * gamma * energies[b]) */                                                     \
  void apply_diag_phase(std::span<Complex> amps, std::span<const double> energies, double gamma);  \
  /* amp_b *= phases[b] */                                                                         \
  void apply_phase_table(std::span<Complex> amps, std::span<const Complex> phases);                \
  /* amp_b *= level_phase[level_of[b]] */                                                          \
  void apply_indexed_phase(std::span<Complex> amps, std::span<const std::uint32_t> level_of,       \
                           std::span<const Complex> level_phase);                                  \
  /* RX(theta) on every qubit */                                                                   \
  void apply_rx_all(std::span<Complex> amps, int n, double theta);                                 \
  void probabilities(std::span<const Complex> amps, std::span<double> out);                        \
  double expectation_diag(std::span<const Complex> amps, std::span<const double> energies);        \
  /* <a|b> */                                                                                      \
  Complex inner(std::span<const Complex> a, std::span<const Complex> b);                           \
  /* <a| diag(energies) |b> */                                                                     \
  Complex diag_overlap(std::span<const Complex> a, std::span<const double> energies,               \
                       std::span<const Complex> b);                                                \
  /* <a| sum_q X_q |b> */                                                                          \
  Complex x_sum_overlap(std::span<const Complex> a, std::span<const Complex> b, int n);

namespace serial {
QWB_KERNEL_DECLS

template <class Fn>
void fill_indexed(std::span<double> out, Fn&& fn) {
  for (std::size_t b = 0; b < out.size(); ++b) out[b] = fn(static_cast<std::uint64_t>(b));
}
}  // namespace serial

namespace omp {
QWB_KERNEL_DECLS

/// out[b] = fn(b), parallel over b. fn must be thread-safe.
template <class Fn>
void fill_indexed(std::span<double> out, Fn&& fn) {
  const auto size = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static) if (size >= 4096)
  for (std::int64_t b = 0; b < size; ++b) out[b] = fn(static_cast<std::uint64_t>(b));
}
}  // namespace omp

#undef QWB_KERNEL_DECLS

}  // namespace qwb::kernels
