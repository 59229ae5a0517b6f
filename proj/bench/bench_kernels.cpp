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

// Serial reference kernels against their OpenMP counterparts.
//
//   ./bench_kernels --benchmark_filter=rx_all
//   OMP_NUM_THREADS=4 ./bench_kernels

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "qwb/kernels.hpp"

namespace {

using qwb::kernels::Complex;
namespace k = qwb::kernels;

std::vector<Complex> random_amps(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<Complex> a(std::size_t{1} << n);
  for (auto& x : a) x = {g(rng), g(rng)};
  return a;
}

std::vector<double> random_energies(int n) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-10, 10);
  std::vector<double> e(std::size_t{1} << n);
  for (auto& x : e) x = u(rng);
  return e;
}

void set_bytes(benchmark::State& state, std::size_t arrays) {
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(arrays) *
                          (std::int64_t{1} << state.range(0)) * static_cast<std::int64_t>(sizeof(Complex)));
}

template <bool Omp>
void rx_all(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto a = random_amps(n, 1);
  for (auto _ : state) {
    if constexpr (Omp) k::omp::apply_rx_all(a, n, 0.3);
    else k::serial::apply_rx_all(a, n, 0.3);
    benchmark::DoNotOptimize(a.data());
  }
  set_bytes(state, static_cast<std::size_t>(n));
}

template <bool Omp>
void apply_1q(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto a = random_amps(n, 2);
  const double c = std::cos(0.2), s = std::sin(0.2);
  const k::Mat2 m = {Complex(c, 0), Complex(0, -s), Complex(0, -s), Complex(c, 0)};
  for (auto _ : state) {
    if constexpr (Omp) k::omp::apply_1q(a, n, n / 2, m);
    else k::serial::apply_1q(a, n, n / 2, m);
    benchmark::DoNotOptimize(a.data());
  }
  set_bytes(state, 1);
}

template <bool Omp>
void diag_phase(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto a = random_amps(n, 3);
  const auto e = random_energies(n);
  for (auto _ : state) {
    if constexpr (Omp) k::omp::apply_diag_phase(a, e, 0.01);
    else k::serial::apply_diag_phase(a, e, 0.01);
    benchmark::DoNotOptimize(a.data());
  }
  set_bytes(state, 1);
}

template <bool Omp>
void expectation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = random_amps(n, 4);
  const auto e = random_energies(n);
  for (auto _ : state) {
    double v;
    if constexpr (Omp) v = k::omp::expectation_diag(a, e);
    else v = k::serial::expectation_diag(a, e);
    benchmark::DoNotOptimize(v);
  }
  set_bytes(state, 1);
}

template <bool Omp>
void x_sum_overlap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = random_amps(n, 5);
  const auto b = random_amps(n, 6);
  for (auto _ : state) {
    Complex v;
    if constexpr (Omp) v = k::omp::x_sum_overlap(a, b, n);
    else v = k::serial::x_sum_overlap(a, b, n);
    benchmark::DoNotOptimize(v);
  }
  set_bytes(state, static_cast<std::size_t>(n));
}

#define QWB_BENCH_PAIR(fn)                                                              \
  BENCHMARK(fn<false>)->Name(#fn "/serial")->DenseRange(8, 20, 4);                      \
  BENCHMARK(fn<true>)->Name(#fn "/omp")->DenseRange(8, 20, 4)

QWB_BENCH_PAIR(rx_all);
QWB_BENCH_PAIR(apply_1q);
QWB_BENCH_PAIR(diag_phase);
QWB_BENCH_PAIR(expectation);
QWB_BENCH_PAIR(x_sum_overlap);

}  // namespace

BENCHMARK_MAIN();
