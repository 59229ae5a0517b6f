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

// Filter selection for a dc-dc boost converter: pick one inductor and one
// capacitor from a catalog at minimum cost subject to current ripple, voltage
// ripple and LC resonance limits, encoded as a QUBO.
//
// Variable layout (also the qubit order): x^L_0..x^L_{nL-1}, x^C_0..x^C_{nC-1},
// z_00, z_01, ..., z_{nL-1,nC-1}; z_ij stands for the product x^L_i x^C_j.

#include <cstdint>
#include <optional>
#include <vector>

#include "qwb/pbool.hpp"

namespace qwb {

/// SI units throughout.
struct ConverterSpec {
  double v_s = 12.0;     // input voltage [V]
  double R = 10.0;       // load [ohm]
  double d = 0.5;        // duty cycle
  double f_sw = 100e3;   // switching frequency [Hz]
  double di_max = 3.0;   // max inductor current ripple [A]
  double dv_max = 0.2;   // max capacitor voltage ripple [V]
  double kappa = 15.0;   // resonance safety factor

  void validate() const;
};

/// Ideal continuous-conduction boost gain: v_o = v_s / (1 - d).
double derived_output_voltage(const ConverterSpec& spec);
double ripple_current(double L, const ConverterSpec& spec);
double ripple_voltage(double C, const ConverterSpec& spec);
double resonance(double L, double C);
/// (kappa / (2 pi f_sw))^2: the smallest admissible L*C [s^2].
double resonance_threshold(const ConverterSpec& spec);
double min_inductance(const ConverterSpec& spec);
double min_capacitance(const ConverterSpec& spec);

struct Component {
  double value;  // henries or farads
  double cost;   // euros
};

struct ComponentCatalog {
  std::vector<Component> inductors;
  std::vector<Component> capacitors;

  void validate() const;
};

/// Unit of the resonance violation g(x) fed to the unbalanced penalty.
///   normalized: g = 1 - sum z_ij L_i C_j / T   (dimensionless, default)
///   si:         g = T - sum z_ij L_i C_j       [s^2]
/// Only the normalized form gives the M5/M6 weights an O(1) lever.
enum class ResonanceUnits { normalized, si };

struct PenaltyWeights {
  double M1 = 5.0, M2 = 5.0, M3 = 5.0, M4 = 5.0, M5 = 0.0, M6 = 0.0;

  void validate() const;
};

class DesignInstance {
 public:
  DesignInstance(ConverterSpec spec, ComponentCatalog catalog);

  const ConverterSpec& spec() const { return spec_; }
  const ComponentCatalog& catalog() const { return catalog_; }
  const VarRegistry& registry() const { return registry_; }

  int num_inductors() const { return static_cast<int>(catalog_.inductors.size()); }
  int num_capacitors() const { return static_cast<int>(catalog_.capacitors.size()); }
  int num_qubits() const { return registry_.size(); }

  int x_l(int i) const { return i; }
  int x_c(int j) const { return num_inductors() + j; }
  int z(int i, int j) const { return num_inductors() + num_capacitors() + i * num_capacitors() + j; }

  /// g(x) as a linear expression over the z variables.
  LinearExpr resonance_violation(ResonanceUnits units) const;
  double resonance_violation_at(std::uint64_t index, ResonanceUnits units) const;
  /// sum k^L_i x^L_i + sum k^C_j x^C_j.
  double component_cost_at(std::uint64_t index) const;

 private:
  ConverterSpec spec_;
  ComponentCatalog catalog_;
  VarRegistry registry_;
};

/// Drops components that violate the ripple limits. Boundary values are kept.
/// Throws InfeasibleInstance if either list ends up empty.
DesignInstance preprocess(const ComponentCatalog& catalog, const ConverterSpec& spec);

struct DesignQubo {
  QuboModel model;
  PenaltyWeights weights;
  ResonanceUnits units = ResonanceUnits::normalized;
  DesignInstance instance;
};

/// The penalized objective: cost + M1 (sum x^L - 1)^2 + M2 (sum x^C - 1)^2
/// + M3 sum Rosenberg(x^L_i, x^C_j, z_ij) + M4 (sum z - 1)^2 + M5 g + M6 g^2.
PseudoBooleanPoly design_polynomial(const DesignInstance& instance, const PenaltyWeights& w,
                                    ResonanceUnits units = ResonanceUnits::normalized);
DesignQubo build_qubo(const DesignInstance& instance, const PenaltyWeights& w,
                      ResonanceUnits units = ResonanceUnits::normalized);

struct DesignSolution {
  std::optional<int> inductor;   // index into the preprocessed catalog
  std::optional<int> capacitor;
  std::optional<double> cost;
  std::optional<double> di_l;
  std::optional<double> dv_c;
  std::optional<double> f_res;
  bool one_hot_ok = false;
  bool z_consistent = false;
  bool resonance_ok = false;
  bool ripple_ok = false;

  bool feasible() const { return one_hot_ok && z_consistent && resonance_ok && ripple_ok; }
};

DesignSolution decode(const DesignInstance& instance, std::uint64_t index);

// Reference data: the converter parameters and the three component tables.
ConverterSpec reference_spec();
ComponentCatalog reference_catalog(int instance_number);  // 1, 2 or 3
/// M1..M4 = 5 and the published M5/M6 for the given instance.
PenaltyWeights reference_weights(int instance_number);

}  // namespace qwb
