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

// QAOA on a dense statevector: |psi> = prod_j [e^{-i beta_j sum X} e^{-i gamma_j H_C}] |+>^n.
// The cost layer is an elementwise phase from a precomputed energy table; the
// mixer is RX(2 beta_j) on every qubit. The model offset is part of the table,
// so it enters expectations and only contributes a global phase to the state.

#include <cstdint>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "qwb/pbool.hpp"
#include "qwb/statevec.hpp"

namespace qwb {

struct QaoaParams {
  std::vector<double> beta;
  std::vector<double> gamma;

  int p() const { return static_cast<int>(beta.size()); }
  void validate() const;
  static QaoaParams constant(int p, double value);
  /// Flattened as [beta_1..beta_p, gamma_1..gamma_p].
  std::vector<double> flat() const;
  static QaoaParams from_flat(std::span<const double> theta);
};

/// Energy table of an Ising model plus the bookkeeping that makes repeated
/// cost layers cheap: equal energies share one phase evaluation.
class CostHamiltonian {
 public:
  explicit CostHamiltonian(const IsingModel& model);
  explicit CostHamiltonian(int n, std::vector<double> energies);

  int n() const { return n_; }
  std::span<const double> energies() const { return energies_; }
  std::size_t num_levels() const { return levels_.size(); }

  /// amps *= exp(-i gamma E).
  void apply(std::span<Complex> amps, double gamma) const;
  /// exp(-i gamma E) for every distinct level; reusable across apply_levels calls.
  std::vector<Complex> level_phases(double gamma) const;
  void apply_levels(std::span<Complex> amps, std::span<const Complex> phases) const;

 private:
  void build_levels();

  int n_;
  std::vector<double> energies_;
  std::vector<double> levels_;
  std::vector<std::uint32_t> level_of_;
};

StateVector qaoa_state(const CostHamiltonian& h, const QaoaParams& params);
StateVector qaoa_state(const IsingModel& m, const QaoaParams& params);
double expectation(const CostHamiltonian& h, const QaoaParams& params);
double expectation(const IsingModel& m, const QaoaParams& params);

enum class GradientMethod { adjoint, finite_difference };

inline constexpr double kFiniteDifferenceStep = 1e-5;

struct ValueAndGradient {
  double value;
  std::vector<double> grad;  // [d/dbeta_1..d/dbeta_p, d/dgamma_1..d/dgamma_p]
};

/// Adjoint reverse sweep: one forward pass, one backward pass.
ValueAndGradient value_and_gradient(const CostHamiltonian& h, const QaoaParams& params);
/// Central differences with step kFiniteDifferenceStep.
std::vector<double> finite_difference_gradient(const CostHamiltonian& h, const QaoaParams& params,
                                               double step = kFiniteDifferenceStep);
std::vector<double> gradient(const IsingModel& m, const QaoaParams& params,
                             GradientMethod method = GradientMethod::adjoint);

struct TrainConfig {
  double step_size = 1e-3;
  int max_iters = 2000;
  double init_value = 0.01;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  GradientMethod gradient_method = GradientMethod::adjoint;
  std::uint64_t seed = 0;
  /// Draw initial angles uniformly from [0, random_init_max) instead of init_value.
  bool random_init = false;
  double random_init_max = std::numbers::pi / 4;
  /// Keep the parameter vector of every iteration in TrainTrace::path.
  bool record_path = false;

  void validate() const;
};

struct TrainTrace {
  QaoaParams initial_params;
  std::vector<double> expectations;  // value before each Adam step
  std::vector<QaoaParams> path;      // filled when record_path is set
  QaoaParams final_params;           // best seen
  double final_expectation = 0.0;
};

QaoaParams initial_params(int p, const TrainConfig& config);

/// Runs exactly config.max_iters Adam steps and returns the best parameters
/// seen (including the point reached after the last step).
TrainTrace train_adam(const CostHamiltonian& h, int p, const TrainConfig& config);
TrainTrace train_adam(const IsingModel& m, int p, const TrainConfig& config);

struct LandscapeGrid {
  double beta_lo = -std::numbers::pi / 4;
  double beta_hi = std::numbers::pi / 4;
  double gamma_lo = -std::numbers::pi / 4;
  double gamma_hi = std::numbers::pi / 4;
  int beta_points = 100;
  int gamma_points = 100;
  int p = 1;
};

struct Landscape {
  std::vector<double> betas;   // ascending
  std::vector<double> gammas;  // ascending
  std::vector<double> values;  // row-major: values[i * gammas.size() + j] at (betas[i], gammas[j])

  double at(std::size_t i, std::size_t j) const { return values[i * gammas.size() + j]; }
  /// (i, j) of the smallest entry, first in row-major order on ties.
  std::pair<std::size_t, std::size_t> argmin() const;
};

/// Equidistant points including both ends; a single point sits at lo.
std::vector<double> linspace(double lo, double hi, int points);

Landscape landscape_scan(const CostHamiltonian& h, const LandscapeGrid& grid);
Landscape landscape_scan(const IsingModel& m, const LandscapeGrid& grid);

}  // namespace qwb
