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

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qwb/kernels.hpp"

namespace qwb {

using Complex = std::complex<double>;

enum class Gate1 { H, X, RX, RZ };
enum class Gate2 { CX, CZ, RZZ };

/// Dense n-qubit state. Qubit 0 is the most significant bit of the basis index.
///
/// The free functions below take the state by value and return the evolved
/// copy; the *_inplace members exist for hot loops that own their state.
class StateVector {
 public:
  /// |0...0>, 1 <= n <= kMaxQubits.
  static StateVector zero(int n);
  /// |+>^n.
  static StateVector uniform(int n);
  static StateVector basis(int n, std::uint64_t index);
  static StateVector from_amplitudes(int n, std::vector<Complex> amps);

  int n() const { return n_; }
  std::size_t size() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> amplitudes_mut() { return amps_; }
  Complex amp(std::uint64_t index) const { return amps_[index]; }
  double norm_squared() const;

  void apply_inplace(Gate1 g, int qubit, double theta = 0.0);
  void apply_inplace(Gate2 g, int q1, int q2, double theta = 0.0);
  void apply_diagonal_phase_inplace(std::span<const double> energies, double gamma);

 private:
  StateVector(int n, std::vector<Complex> amps) : n_(n), amps_(std::move(amps)) {}

  int n_;
  std::vector<Complex> amps_;
};

StateVector init_zero(int n);
StateVector apply_gate(StateVector s, Gate1 g, int qubit, double theta = 0.0);
StateVector apply_two(StateVector s, Gate2 g, int q1, int q2, double theta = 0.0);
/// amp_b <- amp_b * exp(-i gamma E_b).
StateVector apply_diagonal_phase(StateVector s, std::span<const double> energies, double gamma);

std::vector<double> probabilities(const StateVector& s);
/// sum_b |amp_b|^2 E_b.
double expectation_diagonal(const StateVector& s, std::span<const double> energies);
Complex inner_product(const StateVector& a, const StateVector& b);
/// |<a|b>|, equal to 1 when the states agree up to global phase.
double overlap_magnitude(const StateVector& a, const StateVector& b);

/// 2x2 matrix of a single-qubit gate, row-major.
kernels::Mat2 gate_matrix(Gate1 g, double theta);

struct ShotCounts {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t total = 0;
};

/// Multinomial sample of `shots` terminal measurements. Uses std::mt19937_64
/// seeded with `seed`; a draw maps to u = (word >> 11) * 2^-53 and the first
/// basis index whose cumulative probability exceeds u.
ShotCounts sample(const StateVector& s, std::uint64_t shots, std::uint64_t seed);

}  // namespace qwb
