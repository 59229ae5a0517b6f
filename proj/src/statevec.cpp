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

#include "qwb/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

#include "qwb/errors.hpp"

namespace qwb {

namespace k = kernels::omp;

namespace {

void check_qubit(int q, int n) {
  if (q < 0 || q >= n) throw std::out_of_range(fmt::format("qubit {} outside [0, {})", q, n));
}

}  // namespace

StateVector StateVector::zero(int n) { return basis(n, 0); }

StateVector StateVector::uniform(int n) {
  check_qubit_count(n, "StateVector");
  const std::size_t dim = std::size_t{1} << n;
  return StateVector(n, std::vector<Complex>(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0)));
}

StateVector StateVector::basis(int n, std::uint64_t index) {
  check_qubit_count(n, "StateVector");
  const std::size_t dim = std::size_t{1} << n;
  if (index >= dim) throw std::out_of_range("basis index outside the register");
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return StateVector(n, std::move(amps));
}

StateVector StateVector::from_amplitudes(int n, std::vector<Complex> amps) {
  check_qubit_count(n, "StateVector");
  if (amps.size() != (std::size_t{1} << n))
    throw std::invalid_argument("amplitude vector length must be 2^n");
  return StateVector(n, std::move(amps));
}

double StateVector::norm_squared() const { return k::inner(amps_, amps_).real(); }

kernels::Mat2 gate_matrix(Gate1 g, double theta) {
  const double r = 1.0 / std::numbers::sqrt2;
  switch (g) {
    case Gate1::H: return {Complex(r), Complex(r), Complex(r), Complex(-r)};
    case Gate1::X: return {Complex(0), Complex(1), Complex(1), Complex(0)};
    case Gate1::RX: {
      const double c = std::cos(theta / 2), s = std::sin(theta / 2);
      return {Complex(c, 0), Complex(0, -s), Complex(0, -s), Complex(c, 0)};
    }
    case Gate1::RZ:
      return {std::polar(1.0, -theta / 2), Complex(0), Complex(0), std::polar(1.0, theta / 2)};
  }
  throw std::invalid_argument("unknown single-qubit gate");
}

void StateVector::apply_inplace(Gate1 g, int qubit, double theta) {
  check_qubit(qubit, n_);
  k::apply_1q(amps_, n_, qubit, gate_matrix(g, theta));
}

void StateVector::apply_inplace(Gate2 g, int q1, int q2, double theta) {
  check_qubit(q1, n_);
  check_qubit(q2, n_);
  if (q1 == q2) throw std::invalid_argument("two-qubit gate needs distinct qubits");
  switch (g) {
    case Gate2::CX: k::apply_cx(amps_, n_, q1, q2); break;
    case Gate2::CZ: k::apply_cz(amps_, n_, q1, q2); break;
    case Gate2::RZZ: k::apply_rzz(amps_, n_, q1, q2, theta); break;
  }
}

void StateVector::apply_diagonal_phase_inplace(std::span<const double> energies, double gamma) {
  if (energies.size() != amps_.size())
    throw std::invalid_argument(
        fmt::format("energy table has {} entries, state has {}", energies.size(), amps_.size()));
  if (gamma == 0.0) return;
  k::apply_diag_phase(amps_, energies, gamma);
}

StateVector init_zero(int n) { return StateVector::zero(n); }

StateVector apply_gate(StateVector s, Gate1 g, int qubit, double theta) {
  s.apply_inplace(g, qubit, theta);
  return s;
}

StateVector apply_two(StateVector s, Gate2 g, int q1, int q2, double theta) {
  s.apply_inplace(g, q1, q2, theta);
  return s;
}

StateVector apply_diagonal_phase(StateVector s, std::span<const double> energies, double gamma) {
  s.apply_diagonal_phase_inplace(energies, gamma);
  return s;
}

std::vector<double> probabilities(const StateVector& s) {
  std::vector<double> p(s.size());
  k::probabilities(s.amplitudes(), p);
  return p;
}

double expectation_diagonal(const StateVector& s, std::span<const double> energies) {
  if (energies.size() != s.size()) throw std::invalid_argument("energy table size mismatch");
  return k::expectation_diag(s.amplitudes(), energies);
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("state size mismatch");
  return k::inner(a.amplitudes(), b.amplitudes());
}

double overlap_magnitude(const StateVector& a, const StateVector& b) {
  return std::abs(inner_product(a, b));
}

ShotCounts sample(const StateVector& s, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample: need at least one shot");
  const std::vector<double> p = probabilities(s);
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t b = 0; b < p.size(); ++b) cdf[b] = (acc += p[b]);
  std::mt19937_64 rng(seed);
  ShotCounts out;
  out.total = shots;
  for (std::uint64_t i = 0; i < shots; ++i) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    auto b = static_cast<std::size_t>(it - cdf.begin());
    if (b >= p.size()) b = p.size() - 1;
    // never land on a zero-probability entry through a flat cdf segment
    while (p[b] == 0.0 && b > 0) --b;
    ++out.counts[b];
  }
  return out;
}

}  // namespace qwb
