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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qwb/boost_design.hpp"
#include "qwb/errors.hpp"
#include "qwb/pbool.hpp"

namespace qwb {
namespace {

// Penalized objective written out term by term from the bits, without the
// polynomial machinery. Layout: x^L_i, x^C_j, then z_ij row-major.
double scalar_objective(const ComponentCatalog& cat, const ConverterSpec& spec, const PenaltyWeights& w,
                        std::uint64_t index) {
  const int nl = static_cast<int>(cat.inductors.size());
  const int nc = static_cast<int>(cat.capacitors.size());
  const int n = nl + nc + nl * nc;
  const auto xl = [&](int i) { return static_cast<double>(bit_of(index, n, i)); };
  const auto xc = [&](int j) { return static_cast<double>(bit_of(index, n, nl + j)); };
  const auto z = [&](int i, int j) { return static_cast<double>(bit_of(index, n, nl + nc + i * nc + j)); };

  const double t = std::pow(spec.kappa / (2 * std::numbers::pi * spec.f_sw), 2);
  double cost = 0, sl = 0, sc = 0, sz = 0, ros = 0, lc = 0;
  for (int i = 0; i < nl; ++i) {
    cost += cat.inductors[i].cost * xl(i);
    sl += xl(i);
  }
  for (int j = 0; j < nc; ++j) {
    cost += cat.capacitors[j].cost * xc(j);
    sc += xc(j);
  }
  for (int i = 0; i < nl; ++i) {
    for (int j = 0; j < nc; ++j) {
      sz += z(i, j);
      ros += 3 * z(i, j) + xl(i) * xc(j) - 2 * xl(i) * z(i, j) - 2 * xc(j) * z(i, j);
      lc += z(i, j) * cat.inductors[i].value * cat.capacitors[j].value;
    }
  }
  const double g = 1 - lc / t;
  return cost + w.M1 * (sl - 1) * (sl - 1) + w.M2 * (sc - 1) * (sc - 1) + w.M3 * ros +
         w.M4 * (sz - 1) * (sz - 1) + w.M5 * g + w.M6 * g * g;
}

TEST(Converter, DerivedQuantities) {
  const ConverterSpec s = reference_spec();
  EXPECT_DOUBLE_EQ(derived_output_voltage(s), 24.0);
  EXPECT_NEAR(ripple_current(10e-6, s), 3.0, 1e-12);
  EXPECT_NEAR(resonance_threshold(s), std::pow(15.0 / (2 * std::numbers::pi * 100e3), 2), 1e-24);
  EXPECT_NEAR(resonance(22e-6, 54e-6), 1 / (2 * std::numbers::pi * std::sqrt(22e-6 * 54e-6)), 1e-9);
  EXPECT_THROW(ripple_current(0.0, s), std::invalid_argument);
}

TEST(Converter, InstanceSizes) {
  const ConverterSpec s = reference_spec();
  EXPECT_EQ(preprocess(reference_catalog(1), s).num_qubits(), 8);
  EXPECT_EQ(preprocess(reference_catalog(2), s).num_qubits(), 11);
  EXPECT_EQ(preprocess(reference_catalog(3), s).num_qubits(), 15);
}

TEST(Converter, BoundaryInductorKept) {
  const auto inst = preprocess(reference_catalog(1), reference_spec());
  EXPECT_EQ(inst.num_inductors(), 2);
  EXPECT_DOUBLE_EQ(inst.catalog().inductors[0].value, 10e-6);
}

TEST(Converter, RippleFilterAndInfeasible) {
  ComponentCatalog cat{{{5e-6, 0.1}, {22e-6, 0.9}}, {{54e-6, 1.0}}};
  const auto inst = preprocess(cat, reference_spec());
  EXPECT_EQ(inst.num_inductors(), 1);
  cat.inductors = {{5e-6, 0.1}};
  EXPECT_THROW(preprocess(cat, reference_spec()), InfeasibleInstance);
  cat = {{{22e-6, 0.9}}, {{1e-6, 0.1}}};
  EXPECT_THROW(preprocess(cat, reference_spec()), InfeasibleInstance);
}

TEST(Converter, RegistryNames) {
  const auto inst = preprocess(reference_catalog(1), reference_spec());
  EXPECT_EQ(inst.registry().name_of(0), "xL_0");
  EXPECT_EQ(inst.registry().name_of(3), "xC_1");
  EXPECT_EQ(inst.registry().name_of(inst.z(1, 0)), "z_1_0");
  EXPECT_EQ(inst.registry().kind_of(inst.z(1, 1)), VarKind::aux_product);
}

TEST(Converter, ResonanceViolationSigns) {
  const auto inst = preprocess(reference_catalog(1), reference_spec());
  const double t = resonance_threshold(reference_spec());
  // 98: L = 22 uH with C = 54 uF
  EXPECT_NEAR(inst.resonance_violation_at(98, ResonanceUnits::si), t - 22e-6 * 54e-6, 1e-22);
  EXPECT_LT(inst.resonance_violation_at(98, ResonanceUnits::normalized), 0.0);
  // 10 uH with 54 uF violates: z_00 set
  const std::uint64_t idx = (1u << 7) | (1u << 5) | (1u << 3);
  EXPECT_GT(inst.resonance_violation_at(idx, ResonanceUnits::si), 0.0);
  EXPECT_NEAR(inst.resonance_violation_at(idx, ResonanceUnits::normalized), 1 - 10e-6 * 54e-6 / t, 1e-12);
}

TEST(Qubo, MatchesScalarObjective) {
  const ConverterSpec spec = reference_spec();
  for (int k = 1; k <= 3; ++k) {
    const auto cat = reference_catalog(k);
    const auto inst = preprocess(cat, spec);
    for (const PenaltyWeights& w : {reference_weights(k), PenaltyWeights{1, 2, 3, 4, 0.5, 7}}) {
      const DesignQubo dq = build_qubo(inst, w);
      const int n = inst.num_qubits();
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); b += (k == 3 ? 7 : 1)) {
        const double ref = scalar_objective(cat, spec, w, b);
        ASSERT_NEAR(dq.model.energy_at(b), ref, 1e-9 * (1 + std::abs(ref))) << "instance " << k << " index " << b;
      }
    }
  }
}

TEST(Qubo, RejectsNegativeWeights) {
  const auto inst = preprocess(reference_catalog(1), reference_spec());
  EXPECT_THROW(build_qubo(inst, PenaltyWeights{5, 5, -1, 5, 0, 0}), std::invalid_argument);
}

TEST(Decode, OptimalOfInstanceOne) {
  const auto inst = preprocess(reference_catalog(1), reference_spec());
  const DesignSolution s = decode(inst, 98);
  ASSERT_TRUE(s.feasible());
  EXPECT_EQ(*s.inductor, 1);
  EXPECT_EQ(*s.capacitor, 0);
  EXPECT_DOUBLE_EQ(*s.cost, 1.9);
  EXPECT_NEAR(*s.f_res, resonance(22e-6, 54e-6), 1e-9);
}

TEST(Decode, BrokenAssignments) {
  const auto inst = preprocess(reference_catalog(1), reference_spec());
  EXPECT_FALSE(decode(inst, 0).one_hot_ok);
  // both one-hots fine, z on the wrong pair
  const std::uint64_t bad_z = (1u << 6) | (1u << 5) | (1u << 3);
  const DesignSolution s = decode(inst, bad_z);
  EXPECT_TRUE(s.one_hot_ok);
  EXPECT_FALSE(s.z_consistent);
  EXPECT_FALSE(s.feasible());
}

}  // namespace
}  // namespace qwb
