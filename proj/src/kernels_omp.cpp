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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "qwb/kernels.hpp"

namespace qwb::kernels::omp {

namespace {

// Below this many amplitudes the thread fork costs more than the loop.
constexpr std::int64_t kParallelMin = 1 << 12;

inline std::size_t insert_zero(std::size_t k, std::size_t mask) {
  return ((k & ~(mask - 1)) << 1) | (k & (mask - 1));
}

// Sum of term(i) over [0, size) in fixed blocks, partials combined in order.
template <class T, class Term>
T blocked_sum(std::size_t size, Term&& term) {
  const auto blocks = static_cast<std::int64_t>((size + kReduceBlock - 1) / kReduceBlock);
  std::vector<T> partial(static_cast<std::size_t>(blocks), T{});
#pragma omp parallel for schedule(static) if (blocks > 1)
  for (std::int64_t blk = 0; blk < blocks; ++blk) {
    const std::size_t lo = static_cast<std::size_t>(blk) * kReduceBlock;
    const std::size_t hi = std::min(size, lo + kReduceBlock);
    T acc{};
    for (std::size_t i = lo; i < hi; ++i) acc += term(i);
    partial[static_cast<std::size_t>(blk)] = acc;
  }
  T total{};
  for (const T& p : partial) total += p;
  return total;
}

}  // namespace

void apply_1q(std::span<Complex> amps, int n, int qubit, const Mat2& m) {
  const std::size_t mask = qubit_mask(n, qubit);
  const auto half = static_cast<std::int64_t>(amps.size() / 2);
#pragma omp parallel for schedule(static) if (half >= kParallelMin)
  for (std::int64_t k = 0; k < half; ++k) {
    const std::size_t i0 = insert_zero(static_cast<std::size_t>(k), mask);
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
  const auto half = static_cast<std::int64_t>(amps.size() / 2);
#pragma omp parallel for schedule(static) if (half >= kParallelMin)
  for (std::int64_t k = 0; k < half; ++k) {
    const std::size_t i0 = insert_zero(static_cast<std::size_t>(k), tm);
    if (i0 & cm) std::swap(amps[i0], amps[i0 | tm]);
  }
}

void apply_cz(std::span<Complex> amps, int n, int q1, int q2) {
  const std::size_t both = qubit_mask(n, q1) | qubit_mask(n, q2);
  const auto size = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static) if (size >= kParallelMin)
  for (std::int64_t b = 0; b < size; ++b)
    if ((static_cast<std::size_t>(b) & both) == both) amps[b] = -amps[b];
}

void apply_rzz(std::span<Complex> amps, int n, int q1, int q2, double theta) {
  const std::size_t m1 = qubit_mask(n, q1);
  const std::size_t m2 = qubit_mask(n, q2);
  const Complex same = std::polar(1.0, -theta / 2);
  const Complex diff = std::conj(same);
  const auto size = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static) if (size >= kParallelMin)
  for (std::int64_t b = 0; b < size; ++b) {
    const auto u = static_cast<std::size_t>(b);
    amps[b] *= (((u & m1) != 0) == ((u & m2) != 0)) ? same : diff;
  }
}

void apply_diag_phase(std::span<Complex> amps, std::span<const double> energies, double gamma) {
  const auto size = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static) if (size >= kParallelMin)
  for (std::int64_t b = 0; b < size; ++b) amps[b] *= std::polar(1.0, -gamma * energies[b]);
}

void apply_phase_table(std::span<Complex> amps, std::span<const Complex> phases) {
  const auto size = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static) if (size >= kParallelMin)
  for (std::int64_t b = 0; b < size; ++b) amps[b] *= phases[b];
}

void apply_indexed_phase(std::span<Complex> amps, std::span<const std::uint32_t> level_of,
                         std::span<const Complex> level_phase) {
  const auto size = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static) if (size >= kParallelMin)
  for (std::int64_t b = 0; b < size; ++b) amps[b] *= level_phase[level_of[b]];
}

namespace {

// a' = c a - i s b ; b' = c b - i s a over `count` interleaved re/im pairs.
void rx_run(double* __restrict__ a, double* __restrict__ b, std::int64_t count, double c, double s) {
#pragma GCC ivdep
  for (std::int64_t j = 0; j < 2 * count; j += 2) {
    const double ar = a[j], ai = a[j + 1], br = b[j], bi = b[j + 1];
    a[j] = c * ar + s * bi;
    a[j + 1] = c * ai - s * br;
    b[j] = c * br + s * ai;
    b[j + 1] = c * bi - s * ar;
  }
}

}  // namespace

void apply_rx_all(std::span<Complex> amps, int n, double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  const auto size = static_cast<std::int64_t>(amps.size());
  auto* raw = reinterpret_cast<double*>(amps.data());
  for (int q = 0; q < n; ++q) {
    const auto stride = static_cast<std::int64_t>(qubit_mask(n, q));
    const std::int64_t run = std::min<std::int64_t>(stride, 1024);
    const std::int64_t runs_per_block = stride / run;
    const std::int64_t tasks = size / (2 * stride) * runs_per_block;
#pragma omp parallel for schedule(static) if (size >= 2 * kParallelMin)
    for (std::int64_t t = 0; t < tasks; ++t) {
      const std::int64_t blk = t / runs_per_block;
      const std::int64_t off = blk * 2 * stride + (t % runs_per_block) * run;
      rx_run(raw + 2 * off, raw + 2 * (off + stride), run, c, s);
    }
  }
}

void probabilities(std::span<const Complex> amps, std::span<double> out) {
  const auto size = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static) if (size >= kParallelMin)
  for (std::int64_t b = 0; b < size; ++b) out[b] = std::norm(amps[b]);
}

double expectation_diag(std::span<const Complex> amps, std::span<const double> energies) {
  return blocked_sum<double>(amps.size(),
                             [&](std::size_t b) { return std::norm(amps[b]) * energies[b]; });
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  return blocked_sum<Complex>(a.size(), [&](std::size_t i) { return std::conj(a[i]) * b[i]; });
}

Complex diag_overlap(std::span<const Complex> a, std::span<const double> energies,
                     std::span<const Complex> b) {
  return blocked_sum<Complex>(a.size(),
                              [&](std::size_t i) { return std::conj(a[i]) * energies[i] * b[i]; });
}

Complex x_sum_overlap(std::span<const Complex> a, std::span<const Complex> b, int n) {
  return blocked_sum<Complex>(a.size(), [&](std::size_t i) {
    Complex flipped{};
    for (int q = 0; q < n; ++q) flipped += b[i ^ qubit_mask(n, q)];
    return std::conj(a[i]) * flipped;
  });
}

}  // namespace qwb::kernels::omp
