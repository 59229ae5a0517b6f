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

// The OpenMP kernels against the serial reference, and the OpenMP kernels
// against themselves at different thread counts.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qwb/kernels.hpp"
#include "qwb/parallel.hpp"
#include "test_util.hpp"

namespace qwb {
namespace {

namespace ks = kernels::serial;
namespace ko = kernels::omp;
using testing::max_abs_diff;
using testing::random_amplitudes;

constexpr double kTol = 1e-12;

class KernelEquivalence : public ::testing::TestWithParam<int> {};

TEST_P(KernelEquivalence, OneQubitGates) {
  const int n = GetParam();
  const kernels::Mat2 m{Complex(0.3, 0.1), Complex(-0.2, 0.7), Complex(0.5, -0.4), Complex(0.9, 0.2)};
  for (int q = 0; q < n; ++q) {
    auto a = random_amplitudes(n, 1 + q), b = a;
    ks::apply_1q(a, n, q, m);
    ko::apply_1q(b, n, q, m);
    EXPECT_LT(max_abs_diff(a, b), kTol);
  }
}

TEST_P(KernelEquivalence, TwoQubitGates) {
  const int n = GetParam();
  if (n < 2) GTEST_SKIP();
  for (int q1 = 0; q1 < n; ++q1) {
    for (int q2 = 0; q2 < n; ++q2) {
      if (q1 == q2) continue;
      auto a = random_amplitudes(n, 7), b = a;
      ks::apply_cx(a, n, q1, q2);
      ko::apply_cx(b, n, q1, q2);
      ks::apply_cz(a, n, q1, q2);
      ko::apply_cz(b, n, q1, q2);
      ks::apply_rzz(a, n, q1, q2, 0.37);
      ko::apply_rzz(b, n, q1, q2, 0.37);
      EXPECT_LT(max_abs_diff(a, b), kTol);
    }
  }
}

TEST_P(KernelEquivalence, PhasesAndMixer) {
  const int n = GetParam();
  const auto dim = std::size_t{1} << n;
  std::vector<double> e(dim);
  std::vector<Complex> table(dim);
  std::vector<std::uint32_t> level(dim);
  std::vector<Complex> levels{std::polar(1.0, 0.1), std::polar(1.0, -2.0), std::polar(1.0, 0.7)};
  for (std::size_t b = 0; b < dim; ++b) {
    e[b] = std::sin(static_cast<double>(b)) * 3.0;
    table[b] = std::polar(1.0, 0.25 * static_cast<double>(b));
    level[b] = static_cast<std::uint32_t>(b % 3);
  }
  auto a = random_amplitudes(n, 3), b = a;
  ks::apply_diag_phase(a, e, 0.8);
  ko::apply_diag_phase(b, e, 0.8);
  ks::apply_phase_table(a, table);
  ko::apply_phase_table(b, table);
  ks::apply_indexed_phase(a, level, levels);
  ko::apply_indexed_phase(b, level, levels);
  ks::apply_rx_all(a, n, 1.3);
  ko::apply_rx_all(b, n, 1.3);
  EXPECT_LT(max_abs_diff(a, b), kTol);
}

TEST_P(KernelEquivalence, Reductions) {
  const int n = GetParam();
  const auto a = random_amplitudes(n, 21), b = random_amplitudes(n, 22);
  std::vector<double> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::cos(0.3 * static_cast<double>(i));

  std::vector<double> pa(a.size()), pb(a.size());
  ks::probabilities(a, pa);
  ko::probabilities(a, pb);
  for (std::size_t i = 0; i < pa.size(); ++i) EXPECT_EQ(pa[i], pb[i]);

  EXPECT_NEAR(ks::expectation_diag(a, e), ko::expectation_diag(a, e), kTol);
  EXPECT_LT(std::abs(ks::inner(a, b) - ko::inner(a, b)), kTol);
  EXPECT_LT(std::abs(ks::diag_overlap(a, e, b) - ko::diag_overlap(a, e, b)), kTol);
  EXPECT_LT(std::abs(ks::x_sum_overlap(a, b, n) - ko::x_sum_overlap(a, b, n)), kTol);
}

INSTANTIATE_TEST_SUITE_P(Sizes, KernelEquivalence, ::testing::Values(1, 2, 5, 9, 13, 14));

TEST(KernelDeterminism, ThreadCountDoesNotChangeResults) {
  const int n = 15;
  const auto a = random_amplitudes(n, 5), b = random_amplitudes(n, 6);
  std::vector<double> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::sin(1.7 * static_cast<double>(i));

  const auto run = [&] {
    auto s = a;
    ko::apply_rx_all(s, n, 0.9);
    ko::apply_diag_phase(s, e, 0.4);
    return std::tuple{ko::expectation_diag(s, e), ko::inner(s, b), ko::x_sum_overlap(s, b, n),
                      ko::diag_overlap(s, e, b), s};
  };
  set_num_threads(1);
  const auto one = run();
  set_num_threads(4);
  const auto four = run();
  set_num_threads(0);
  EXPECT_EQ(std::get<0>(one), std::get<0>(four));
  EXPECT_EQ(std::get<1>(one), std::get<1>(four));
  EXPECT_EQ(std::get<2>(one), std::get<2>(four));
  EXPECT_EQ(std::get<3>(one), std::get<3>(four));
  EXPECT_EQ(std::get<4>(one), std::get<4>(four));
}

TEST(Kernels, RxAllIsProductOfSingleRx) {
  const int n = 4;
  const double t = 0.6;
  const kernels::Mat2 rx{Complex(std::cos(t / 2), 0), Complex(0, -std::sin(t / 2)),
                         Complex(0, -std::sin(t / 2)), Complex(std::cos(t / 2), 0)};
  auto a = random_amplitudes(n, 9), b = a;
  ko::apply_rx_all(a, n, t);
  for (int q = 0; q < n; ++q) ks::apply_1q(b, n, q, rx);
  EXPECT_LT(max_abs_diff(a, b), kTol);
}

}  // namespace
}  // namespace qwb
