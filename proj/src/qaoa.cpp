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

#include "qwb/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

#include "qwb/errors.hpp"
#include "qwb/kernels.hpp"
#include "qwb/oracle.hpp"

namespace qwb {

namespace k = kernels::omp;

// ---- QaoaParams -------------------------------------------------------------

void QaoaParams::validate() const {
  if (beta.empty()) throw std::invalid_argument("QAOA needs at least one layer");
  if (beta.size() != gamma.size())
    throw std::invalid_argument(fmt::format("beta has {} entries, gamma has {}", beta.size(), gamma.size()));
  for (const auto* v : {&beta, &gamma})
    for (double x : *v)
      if (!std::isfinite(x)) throw std::invalid_argument("non-finite QAOA angle");
}

QaoaParams QaoaParams::constant(int p, double value) {
  if (p < 1) throw std::invalid_argument("QAOA needs at least one layer");
  return {std::vector<double>(static_cast<std::size_t>(p), value),
          std::vector<double>(static_cast<std::size_t>(p), value)};
}

std::vector<double> QaoaParams::flat() const {
  std::vector<double> theta(beta);
  theta.insert(theta.end(), gamma.begin(), gamma.end());
  return theta;
}

QaoaParams QaoaParams::from_flat(std::span<const double> theta) {
  if (theta.size() % 2 != 0) throw std::invalid_argument("flat QAOA parameter vector has odd length");
  const std::size_t p = theta.size() / 2;
  return {std::vector<double>(theta.begin(), theta.begin() + static_cast<std::ptrdiff_t>(p)),
          std::vector<double>(theta.begin() + static_cast<std::ptrdiff_t>(p), theta.end())};
}

// ---- CostHamiltonian ----------------------------------------------------------

CostHamiltonian::CostHamiltonian(const IsingModel& model)
    : n_(model.n()), energies_(energy_table(model)) {
  build_levels();
}

CostHamiltonian::CostHamiltonian(int n, std::vector<double> energies)
    : n_(n), energies_(std::move(energies)) {
  check_qubit_count(n, "CostHamiltonian");
  if (energies_.size() != (std::size_t{1} << n))
    throw std::invalid_argument("energy table length must be 2^n");
  build_levels();
}

void CostHamiltonian::build_levels() {
  levels_ = energies_;
  std::sort(levels_.begin(), levels_.end());
  levels_.erase(std::unique(levels_.begin(), levels_.end()), levels_.end());
  level_of_.resize(energies_.size());
  for (std::size_t b = 0; b < energies_.size(); ++b)
    level_of_[b] = static_cast<std::uint32_t>(
        std::lower_bound(levels_.begin(), levels_.end(), energies_[b]) - levels_.begin());
}

void CostHamiltonian::apply(std::span<Complex> amps, double gamma) const {
  if (gamma == 0.0) return;
  apply_levels(amps, level_phases(gamma));
}

std::vector<Complex> CostHamiltonian::level_phases(double gamma) const {
  std::vector<Complex> phase(levels_.size());
  for (std::size_t l = 0; l < levels_.size(); ++l) phase[l] = std::polar(1.0, -gamma * levels_[l]);
  return phase;
}

void CostHamiltonian::apply_levels(std::span<Complex> amps, std::span<const Complex> phases) const {
  if (phases.size() != levels_.size()) throw std::invalid_argument("phase table has the wrong length");
  k::apply_indexed_phase(amps, level_of_, phases);
}

// ---- evaluation -------------------------------------------------------------------

StateVector qaoa_state(const CostHamiltonian& h, const QaoaParams& params) {
  params.validate();
  StateVector s = StateVector::uniform(h.n());
  auto amps = s.amplitudes_mut();
  for (int j = 0; j < params.p(); ++j) {
    h.apply(amps, params.gamma[static_cast<std::size_t>(j)]);
    k::apply_rx_all(amps, h.n(), 2.0 * params.beta[static_cast<std::size_t>(j)]);
  }
  return s;
}

StateVector qaoa_state(const IsingModel& m, const QaoaParams& params) {
  return qaoa_state(CostHamiltonian(m), params);
}

double expectation(const CostHamiltonian& h, const QaoaParams& params) {
  return expectation_diagonal(qaoa_state(h, params), h.energies());
}

double expectation(const IsingModel& m, const QaoaParams& params) {
  return expectation(CostHamiltonian(m), params);
}

// ---- gradients ----------------------------------------------------------------------

namespace {

// Above this many stored amplitudes the backward sweep recomputes phi instead.
constexpr std::size_t kStoredAmplitudeCap = std::size_t{1} << 24;

}  // namespace

ValueAndGradient value_and_gradient(const CostHamiltonian& h, const QaoaParams& params) {
  params.validate();
  const int n = h.n();
  const int p = params.p();
  const auto pu = static_cast<std::size_t>(p);
  const auto energies = h.energies();
  const std::size_t dim = energies.size();
  const bool store = dim * (pu + 1) <= kStoredAmplitudeCap;

  // Forward sweep. Keeps each layer's phase table and, when affordable, the
  // state entering every layer.
  std::vector<std::vector<Complex>> tables(pu);
  std::vector<std::vector<Complex>> entering;
  const StateVector start = StateVector::uniform(n);
  std::vector<Complex> phi(start.amplitudes().begin(), start.amplitudes().end());
  for (std::size_t j = 0; j < pu; ++j) {
    if (store) entering.push_back(phi);
    tables[j] = h.level_phases(params.gamma[j]);
    h.apply_levels(phi, tables[j]);
    k::apply_rx_all(phi, n, 2.0 * params.beta[j]);
  }

  std::vector<Complex> lambda(dim);
  for (std::size_t b = 0; b < dim; ++b) lambda[b] = energies[b] * phi[b];

  ValueAndGradient out{k::inner(phi, lambda).real(), std::vector<double>(2 * pu)};
  // dE/dtheta = 2 Im <lambda| G |phi> for a gate exp(-i theta G), with lambda
  // and phi both pulled back to just after that gate.
  for (std::size_t j = pu; j-- > 0;) {
    out.grad[j] = 2.0 * k::x_sum_overlap(lambda, phi, n).imag();
    k::apply_rx_all(lambda, n, -2.0 * params.beta[j]);
    if (store) {
      phi = entering[j];
      h.apply_levels(phi, tables[j]);
    } else {
      k::apply_rx_all(phi, n, -2.0 * params.beta[j]);
    }

    out.grad[pu + j] = 2.0 * k::diag_overlap(lambda, energies, phi).imag();
    for (auto& ph : tables[j]) ph = std::conj(ph);
    h.apply_levels(lambda, tables[j]);
    if (store) phi = std::move(entering[j]);
    else h.apply_levels(phi, tables[j]);
  }
  return out;
}

std::vector<double> finite_difference_gradient(const CostHamiltonian& h, const QaoaParams& params,
                                               double step) {
  std::vector<double> theta = params.flat();
  std::vector<double> grad(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const double keep = theta[i];
    theta[i] = keep + step;
    const double up = expectation(h, QaoaParams::from_flat(theta));
    theta[i] = keep - step;
    const double down = expectation(h, QaoaParams::from_flat(theta));
    theta[i] = keep;
    grad[i] = (up - down) / (2.0 * step);
  }
  return grad;
}

std::vector<double> gradient(const IsingModel& m, const QaoaParams& params, GradientMethod method) {
  const CostHamiltonian h(m);
  if (method == GradientMethod::finite_difference) return finite_difference_gradient(h, params);
  return value_and_gradient(h, params).grad;
}

// ---- training -------------------------------------------------------------------------

void TrainConfig::validate() const {
  if (!(step_size > 0.0)) throw std::invalid_argument("step size must be positive");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
  if (!(adam_beta1 >= 0.0 && adam_beta1 < 1.0) || !(adam_beta2 >= 0.0 && adam_beta2 < 1.0))
    throw std::invalid_argument("Adam decay rates must lie in [0, 1)");
  if (!(adam_eps > 0.0)) throw std::invalid_argument("Adam epsilon must be positive");
}

QaoaParams initial_params(int p, const TrainConfig& config) {
  if (!config.random_init) return QaoaParams::constant(p, config.init_value);
  std::mt19937_64 rng(config.seed);
  QaoaParams out = QaoaParams::constant(p, 0.0);
  for (auto* v : {&out.beta, &out.gamma})
    for (double& x : *v) x = static_cast<double>(rng() >> 11) * 0x1.0p-53 * config.random_init_max;
  return out;
}

TrainTrace train_adam(const CostHamiltonian& h, int p, const TrainConfig& config) {
  config.validate();
  TrainTrace trace;
  trace.initial_params = initial_params(p, config);
  std::vector<double> theta = trace.initial_params.flat();
  std::vector<double> m(theta.size(), 0.0), v(theta.size(), 0.0);
  trace.expectations.reserve(static_cast<std::size_t>(config.max_iters));

  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_theta = theta;
  double b1t = 1.0, b2t = 1.0;
  for (int t = 1; t <= config.max_iters; ++t) {
    const QaoaParams params = QaoaParams::from_flat(theta);
    if (config.record_path) trace.path.push_back(params);
    std::vector<double> grad;
    double value;
    if (config.gradient_method == GradientMethod::adjoint) {
      ValueAndGradient vg = value_and_gradient(h, params);
      value = vg.value;
      grad = std::move(vg.grad);
    } else {
      value = expectation(h, params);
      grad = finite_difference_gradient(h, params);
    }
    trace.expectations.push_back(value);
    if (value < best) {
      best = value;
      best_theta = theta;
    }
    b1t *= config.adam_beta1;
    b2t *= config.adam_beta2;
    for (std::size_t i = 0; i < theta.size(); ++i) {
      m[i] = config.adam_beta1 * m[i] + (1.0 - config.adam_beta1) * grad[i];
      v[i] = config.adam_beta2 * v[i] + (1.0 - config.adam_beta2) * grad[i] * grad[i];
      const double m_hat = m[i] / (1.0 - b1t);
      const double v_hat = v[i] / (1.0 - b2t);
      theta[i] -= config.step_size * m_hat / (std::sqrt(v_hat) + config.adam_eps);
    }
  }
  const double last = expectation(h, QaoaParams::from_flat(theta));
  if (config.record_path) trace.path.push_back(QaoaParams::from_flat(theta));
  if (last < best) {
    best = last;
    best_theta = theta;
  }
  trace.final_params = QaoaParams::from_flat(best_theta);
  trace.final_expectation = best;
  return trace;
}

TrainTrace train_adam(const IsingModel& m, int p, const TrainConfig& config) {
  return train_adam(CostHamiltonian(m), p, config);
}

// ---- landscape ----------------------------------------------------------------------------

std::vector<double> linspace(double lo, double hi, int points) {
  if (points < 1) throw std::invalid_argument("grid needs at least one point per axis");
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i)
    out[static_cast<std::size_t>(i)] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
  return out;
}

std::pair<std::size_t, std::size_t> Landscape::argmin() const {
  const auto it = std::min_element(values.begin(), values.end());
  const auto flat = static_cast<std::size_t>(it - values.begin());
  return {flat / gammas.size(), flat % gammas.size()};
}

Landscape landscape_scan(const CostHamiltonian& h, const LandscapeGrid& grid) {
  if (grid.p != 1) throw std::invalid_argument(fmt::format("landscape scan is defined for p = 1, got p = {}", grid.p));
  Landscape out;
  out.betas = linspace(grid.beta_lo, grid.beta_hi, grid.beta_points);
  out.gammas = linspace(grid.gamma_lo, grid.gamma_hi, grid.gamma_points);
  out.values.resize(out.betas.size() * out.gammas.size());
  const auto total = static_cast<std::int64_t>(out.values.size());
  const std::size_t cols = out.gammas.size();
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const auto u = static_cast<std::size_t>(idx);
    const QaoaParams params{{out.betas[u / cols]}, {out.gammas[u % cols]}};
    out.values[u] = expectation(h, params);
  }
  return out;
}

Landscape landscape_scan(const IsingModel& m, const LandscapeGrid& grid) {
  return landscape_scan(CostHamiltonian(m), grid);
}

}  // namespace qwb
