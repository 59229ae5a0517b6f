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

// Choose (M5, M6) so that every feasible assignment sits strictly below every
// infeasible one. The assignments are enumerated up front, which leaves a
// small LP in the two weights.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qwb/boost_design.hpp"
#include "qwb/oracle.hpp"
#include "qwb/simplex.hpp"

namespace qwb {

struct DecompositionEntry {
  std::uint64_t index;
  double e0;  // cost plus the M1..M4 blocks
  double e1;  // g(x), multiplies M5
  double e2;  // g(x)^2, multiplies M6
  SolutionClass cls;
};

struct EnergyDecomposition {
  int n = 0;
  PenaltyWeights base;  // M5 and M6 are zero
  ResonanceUnits units = ResonanceUnits::normalized;
  std::vector<DecompositionEntry> entries;  // ascending index

  double energy(std::uint64_t index, double m5, double m6) const {
    const auto& e = entries[index];
    return e.e0 + m5 * e.e1 + m6 * e.e2;
  }
};

/// M5/M6 of `base` are ignored.
EnergyDecomposition decompose_energies(const DesignInstance& instance, const PenaltyWeights& base,
                                       ResonanceUnits units = ResonanceUnits::normalized);

inline constexpr double kDefaultWeightBound = 50.0;

struct SeparationLp {
  LpProblem lp;  // columns: M5, M6, u, v, gap
  std::size_t raw_constraints = 0;
  /// Basis index behind each class row, in row order. The final row is the gap link.
  std::vector<std::uint64_t> row_index;
  std::vector<SolutionClass> row_class;
};

enum SeparationColumn { col_m5 = 0, col_m6, col_u, col_v, col_gap };

/// Throws std::invalid_argument when a class is empty or the bound is negative.
SeparationLp build_separation_lp(const EnergyDecomposition& dec,
                                 double weight_upper_bound = kDefaultWeightBound, bool prune = true);

struct ActiveConstraint {
  std::uint64_t index;
  SolutionClass cls;
};

struct TuneResult {
  double M5 = 0.0;
  double M6 = 0.0;
  double gap = 0.0;
  bool separation_ok = false;
  std::vector<ActiveConstraint> active;
  std::size_t raw_constraints = 0;
  std::size_t pruned_constraints = 0;
};

TuneResult solve_lp(const SeparationLp& slp);

/// decompose, build, solve.
TuneResult tune_weights(const DesignInstance& instance, const PenaltyWeights& base,
                        double weight_upper_bound = kDefaultWeightBound,
                        ResonanceUnits units = ResonanceUnits::normalized);

/// `{"M5":..,"M6":..,"gap":..,"separation_ok":..}` plus the active-constraint report.
void write_tune_json(std::ostream& out, const TuneResult& r);

}  // namespace qwb
