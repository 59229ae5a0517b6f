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

#include "qwb/boost_design.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "qwb/errors.hpp"

namespace qwb {

namespace {

// Relative slack for ripple boundaries; 10 uH sits exactly on 3 A.
constexpr double kBoundaryTol = 1e-12;

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void ConverterSpec::validate() const {
  if (!positive(v_s) || !positive(R) || !positive(f_sw) || !positive(di_max) || !positive(dv_max))
    throw std::invalid_argument("converter parameters must be positive");
  if (!(d > 0.0 && d < 1.0)) throw std::invalid_argument("duty cycle must lie strictly inside (0, 1)");
  if (!(kappa > 1.0)) throw std::invalid_argument("kappa must exceed 1");
}

double derived_output_voltage(const ConverterSpec& spec) {
  if (!(spec.d >= 0.0 && spec.d < 1.0)) throw std::invalid_argument("duty cycle must lie in [0, 1)");
  return spec.v_s / (1.0 - spec.d);
}

double ripple_current(double L, const ConverterSpec& spec) {
  if (!positive(L)) throw std::invalid_argument("inductance must be positive");
  return spec.v_s / (2.0 * L) * spec.d / spec.f_sw;
}

double ripple_voltage(double C, const ConverterSpec& spec) {
  if (!positive(C)) throw std::invalid_argument("capacitance must be positive");
  return derived_output_voltage(spec) / (2.0 * spec.R * C) * spec.d / spec.f_sw;
}

double resonance(double L, double C) {
  if (!positive(L) || !positive(C)) throw std::invalid_argument("L and C must be positive");
  return 1.0 / (2.0 * std::numbers::pi * std::sqrt(L * C));
}

double resonance_threshold(const ConverterSpec& spec) {
  const double t = spec.kappa / (2.0 * std::numbers::pi * spec.f_sw);
  return t * t;
}

double min_inductance(const ConverterSpec& spec) {
  return spec.d * spec.v_s / (2.0 * spec.f_sw * spec.di_max);
}

double min_capacitance(const ConverterSpec& spec) {
  return spec.d * derived_output_voltage(spec) / (2.0 * spec.f_sw * spec.R * spec.dv_max);
}

void ComponentCatalog::validate() const {
  if (inductors.empty() || capacitors.empty())
    throw std::invalid_argument("catalog needs at least one inductor and one capacitor");
  for (const auto* list : {&inductors, &capacitors})
    for (const Component& c : *list)
      if (!positive(c.value) || !positive(c.cost))
        throw std::invalid_argument("component values and costs must be positive");
}

void PenaltyWeights::validate() const {
  for (double m : {M1, M2, M3, M4, M5, M6})
    if (!(m >= 0.0) || !std::isfinite(m)) throw std::invalid_argument("penalty weights must be non-negative");
}

// ---- DesignInstance -----------------------------------------------------------

DesignInstance::DesignInstance(ConverterSpec spec, ComponentCatalog catalog)
    : spec_(spec), catalog_(std::move(catalog)) {
  spec_.validate();
  catalog_.validate();
  for (int i = 0; i < num_inductors(); ++i) registry_.add(fmt::format("xL_{}", i), VarKind::decision);
  for (int j = 0; j < num_capacitors(); ++j) registry_.add(fmt::format("xC_{}", j), VarKind::decision);
  for (int i = 0; i < num_inductors(); ++i)
    for (int j = 0; j < num_capacitors(); ++j) registry_.add(fmt::format("z_{}_{}", i, j), VarKind::aux_product);
}

LinearExpr DesignInstance::resonance_violation(ResonanceUnits units) const {
  const double t = resonance_threshold(spec_);
  const double scale = units == ResonanceUnits::normalized ? 1.0 / t : 1.0;
  LinearExpr g;
  g.constant = units == ResonanceUnits::normalized ? 1.0 : t;
  for (int i = 0; i < num_inductors(); ++i)
    for (int j = 0; j < num_capacitors(); ++j)
      g.coeffs.emplace_back(z(i, j), -catalog_.inductors[i].value * catalog_.capacitors[j].value * scale);
  return g;
}

double DesignInstance::resonance_violation_at(std::uint64_t index, ResonanceUnits units) const {
  const LinearExpr g = resonance_violation(units);
  double acc = g.constant;
  for (auto [v, a] : g.coeffs)
    if (bit_of(index, num_qubits(), v)) acc += a;
  return acc;
}

double DesignInstance::component_cost_at(std::uint64_t index) const {
  double acc = 0.0;
  for (int i = 0; i < num_inductors(); ++i)
    if (bit_of(index, num_qubits(), x_l(i))) acc += catalog_.inductors[i].cost;
  for (int j = 0; j < num_capacitors(); ++j)
    if (bit_of(index, num_qubits(), x_c(j))) acc += catalog_.capacitors[j].cost;
  return acc;
}

DesignInstance preprocess(const ComponentCatalog& catalog, const ConverterSpec& spec) {
  spec.validate();
  catalog.validate();
  const double l_min = min_inductance(spec);
  const double c_min = min_capacitance(spec);
  ComponentCatalog kept;
  for (const Component& l : catalog.inductors)
    if (l.value >= l_min * (1.0 - kBoundaryTol)) kept.inductors.push_back(l);
  for (const Component& c : catalog.capacitors)
    if (c.value >= c_min * (1.0 - kBoundaryTol)) kept.capacitors.push_back(c);
  if (kept.inductors.empty())
    throw InfeasibleInstance(fmt::format(
        "no inductor meets the current ripple limit: need L >= {:.6g} H for di_max = {:g} A", l_min, spec.di_max));
  if (kept.capacitors.empty())
    throw InfeasibleInstance(fmt::format(
        "no capacitor meets the voltage ripple limit: need C >= {:.6g} F for dv_max = {:g} V", c_min, spec.dv_max));
  return DesignInstance(spec, std::move(kept));
}

// ---- QUBO -----------------------------------------------------------------------

PseudoBooleanPoly design_polynomial(const DesignInstance& inst, const PenaltyWeights& w,
                                    ResonanceUnits units) {
  w.validate();
  const int n = inst.num_qubits();
  const int nl = inst.num_inductors();
  const int nc = inst.num_capacitors();

  PseudoBooleanPoly p(n);
  for (int i = 0; i < nl; ++i) p.add_term({inst.x_l(i)}, inst.catalog().inductors[i].cost);
  for (int j = 0; j < nc; ++j) p.add_term({inst.x_c(j)}, inst.catalog().capacitors[j].cost);

  LinearExpr one_l{{}, -1.0};
  for (int i = 0; i < nl; ++i) one_l.coeffs.emplace_back(inst.x_l(i), 1.0);
  p = add_equality_penalty(p, one_l, w.M1);

  LinearExpr one_c{{}, -1.0};
  for (int j = 0; j < nc; ++j) one_c.coeffs.emplace_back(inst.x_c(j), 1.0);
  p = add_equality_penalty(p, one_c, w.M2);

  if (w.M3 != 0.0)
    for (int i = 0; i < nl; ++i)
      for (int j = 0; j < nc; ++j) p += rosenberg_penalty(inst.x_l(i), inst.x_c(j), inst.z(i, j), w.M3, n);

  LinearExpr one_z{{}, -1.0};
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nc; ++j) one_z.coeffs.emplace_back(inst.z(i, j), 1.0);
  p = add_equality_penalty(p, one_z, w.M4);

  p = add_unbalanced_penalty(p, inst.resonance_violation(units), w.M5, w.M6);
  return p.simplified();
}

DesignQubo build_qubo(const DesignInstance& instance, const PenaltyWeights& w, ResonanceUnits units) {
  return DesignQubo{to_qubo(design_polynomial(instance, w, units)), w, units, instance};
}

DesignSolution decode(const DesignInstance& inst, std::uint64_t index) {
  const int n = inst.num_qubits();
  if (index >> n) throw std::out_of_range("basis index outside the instance register");
  DesignSolution s;
  int count_l = 0, count_c = 0;
  for (int i = 0; i < inst.num_inductors(); ++i)
    if (bit_of(index, n, inst.x_l(i))) {
      ++count_l;
      s.inductor = i;
    }
  for (int j = 0; j < inst.num_capacitors(); ++j)
    if (bit_of(index, n, inst.x_c(j))) {
      ++count_c;
      s.capacitor = j;
    }
  if (count_l != 1) s.inductor.reset();
  if (count_c != 1) s.capacitor.reset();
  s.one_hot_ok = count_l == 1 && count_c == 1;

  s.z_consistent = true;
  for (int i = 0; i < inst.num_inductors(); ++i)
    for (int j = 0; j < inst.num_capacitors(); ++j) {
      const int expect = bit_of(index, n, inst.x_l(i)) & bit_of(index, n, inst.x_c(j));
      if (bit_of(index, n, inst.z(i, j)) != expect) s.z_consistent = false;
    }

  if (s.inductor && s.capacitor) {
    const Component& l = inst.catalog().inductors[*s.inductor];
    const Component& c = inst.catalog().capacitors[*s.capacitor];
    s.cost = l.cost + c.cost;
    s.di_l = ripple_current(l.value, inst.spec());
    s.dv_c = ripple_voltage(c.value, inst.spec());
    s.f_res = resonance(l.value, c.value);
    s.resonance_ok = l.value * c.value >= resonance_threshold(inst.spec());
    s.ripple_ok = *s.di_l <= inst.spec().di_max * (1.0 + kBoundaryTol) &&
                  *s.dv_c <= inst.spec().dv_max * (1.0 + kBoundaryTol);
  }
  return s;
}

// ---- reference data -----------------------------------------------------------------

ConverterSpec reference_spec() { return ConverterSpec{}; }

ComponentCatalog reference_catalog(int instance_number) {
  const std::vector<Component> l{{10e-6, 0.5}, {22e-6, 0.9}, {47e-6, 1.5}};
  const std::vector<Component> c{{54e-6, 1.0}, {115e-6, 1.5}, {253e-6, 2.5}};
  switch (instance_number) {
    case 1: return {{l[0], l[1]}, {c[0], c[1]}};
    case 2: return {{l[0], l[1], l[2]}, {c[0], c[1]}};
    case 3: return {l, c};
  }
  throw std::invalid_argument(fmt::format("no reference instance {}", instance_number));
}

PenaltyWeights reference_weights(int instance_number) {
  switch (instance_number) {
    case 1: return {5, 5, 5, 5, 8.507, 1.877};
    case 2: return {5, 5, 5, 5, 4.033, 0.411};
    case 3: return {5, 5, 5, 5, 1.756, 0.079};
  }
  throw std::invalid_argument(fmt::format("no reference instance {}", instance_number));
}

}  // namespace qwb
