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

// Exhaustive ground truth: every basis state's energy, classified against the
// constrained problem the model encodes.

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "qwb/boost_design.hpp"
#include "qwb/pbool.hpp"

namespace qwb {

enum class SolutionClass { unclassified, optimal, feasible, infeasible };

std::string_view to_string(SolutionClass c);
/// optimal counts as feasible.
inline bool is_feasible(SolutionClass c) {
  return c == SolutionClass::optimal || c == SolutionClass::feasible;
}

struct SpectrumEntry {
  std::uint64_t index;
  double energy;
  SolutionClass cls = SolutionClass::unclassified;
};

struct Spectrum {
  int n = 0;
  std::vector<SpectrumEntry> entries;  // ascending index unless `sorted`
  bool sorted = false;                 // ascending energy, ties by index
};

/// Energy of every basis state, E[b] = model.energy_at(b).
std::vector<double> energy_table(const QuboModel& model);
std::vector<double> energy_table(const IsingModel& model);

Spectrum enumerate(const QuboModel& model);
Spectrum enumerate(const IsingModel& model);

Spectrum sorted_by_energy(Spectrum s);

/// Feasible iff decode() says so; optimal iff feasible at minimum component cost.
Spectrum classify(Spectrum s, const DesignInstance& instance);
/// For unconstrained models: everything feasible, ground states optimal.
Spectrum classify_unconstrained(Spectrum s);

inline constexpr double kTieTolerance = 1e-9;

/// Indices (ascending) within kTieTolerance of the minimum energy.
std::vector<std::uint64_t> ground_states(const Spectrum& s);

struct SeparationReport {
  double max_feasible_energy;
  double min_infeasible_energy;
  double gap;  // min_infeasible - max_feasible; > 0 certifies the encoding

  bool separated() const { return gap > 0.0; }
};

SeparationReport separation_report(const Spectrum& classified);
/// Same report computed on the fly, without storing 2^n entries.
SeparationReport separation_report(const QuboModel& model, const DesignInstance& instance);

/// CSV with header `index,bitstring,energy,class`.
void write_spectrum_csv(std::ostream& out, const Spectrum& s);

}  // namespace qwb
