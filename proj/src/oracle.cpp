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

#include "qwb/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "qwb/errors.hpp"
#include "qwb/kernels.hpp"

namespace qwb {

std::string_view to_string(SolutionClass c) {
  switch (c) {
    case SolutionClass::optimal: return "optimal";
    case SolutionClass::feasible: return "feasible";
    case SolutionClass::infeasible: return "infeasible";
    case SolutionClass::unclassified: break;
  }
  return "unclassified";
}

namespace {

template <class Model>
std::vector<double> table_of(const Model& model) {
  check_qubit_count(model.n(), "enumerate");
  std::vector<double> e(std::size_t{1} << model.n());
  kernels::omp::fill_indexed(e, [&](std::uint64_t b) { return model.energy_at(b); });
  return e;
}

Spectrum from_table(int n, const std::vector<double>& e) {
  Spectrum s;
  s.n = n;
  s.entries.resize(e.size());
  for (std::size_t b = 0; b < e.size(); ++b) s.entries[b] = {b, e[b], SolutionClass::unclassified};
  return s;
}

}  // namespace

std::vector<double> energy_table(const QuboModel& model) { return table_of(model); }
std::vector<double> energy_table(const IsingModel& model) { return table_of(model); }

Spectrum enumerate(const QuboModel& model) { return from_table(model.n(), table_of(model)); }
Spectrum enumerate(const IsingModel& model) { return from_table(model.n(), table_of(model)); }

Spectrum sorted_by_energy(Spectrum s) {
  std::sort(s.entries.begin(), s.entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    return a.energy != b.energy ? a.energy < b.energy : a.index < b.index;
  });
  s.sorted = true;
  return s;
}

Spectrum classify(Spectrum s, const DesignInstance& instance) {
  if (s.n != instance.num_qubits())
    throw std::invalid_argument(
        fmt::format("spectrum has {} qubits, instance needs {}", s.n, instance.num_qubits()));
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::optional<double>> cost(s.entries.size());
  for (std::size_t k = 0; k < s.entries.size(); ++k) {
    const DesignSolution sol = decode(instance, s.entries[k].index);
    if (sol.feasible()) {
      cost[k] = *sol.cost;
      best = std::min(best, *sol.cost);
    }
  }
  for (std::size_t k = 0; k < s.entries.size(); ++k) {
    if (!cost[k])
      s.entries[k].cls = SolutionClass::infeasible;
    else
      s.entries[k].cls = std::abs(*cost[k] - best) <= kTieTolerance ? SolutionClass::optimal : SolutionClass::feasible;
  }
  return s;
}

Spectrum classify_unconstrained(Spectrum s) {
  const std::vector<std::uint64_t> ground = ground_states(s);
  for (SpectrumEntry& e : s.entries)
    e.cls = std::binary_search(ground.begin(), ground.end(), e.index) ? SolutionClass::optimal
                                                                      : SolutionClass::feasible;
  return s;
}

std::vector<std::uint64_t> ground_states(const Spectrum& s) {
  double lo = std::numeric_limits<double>::infinity();
  for (const SpectrumEntry& e : s.entries) lo = std::min(lo, e.energy);
  std::vector<std::uint64_t> out;
  for (const SpectrumEntry& e : s.entries)
    if (e.energy - lo <= kTieTolerance) out.push_back(e.index);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
SeparationReport finish(double max_feasible, double min_infeasible) {
  if (max_feasible == -std::numeric_limits<double>::infinity())
    throw std::invalid_argument("separation report: the feasible class is empty");
  if (min_infeasible == std::numeric_limits<double>::infinity())
    throw std::invalid_argument("separation report: the infeasible class is empty");
  return {max_feasible, min_infeasible, min_infeasible - max_feasible};
}
}  // namespace

SeparationReport separation_report(const Spectrum& classified) {
  double max_f = -std::numeric_limits<double>::infinity();
  double min_i = std::numeric_limits<double>::infinity();
  for (const SpectrumEntry& e : classified.entries) {
    if (e.cls == SolutionClass::unclassified)
      throw std::invalid_argument("separation report needs a classified spectrum");
    if (is_feasible(e.cls))
      max_f = std::max(max_f, e.energy);
    else
      min_i = std::min(min_i, e.energy);
  }
  return finish(max_f, min_i);
}

SeparationReport separation_report(const QuboModel& model, const DesignInstance& instance) {
  if (model.n() != instance.num_qubits()) throw std::invalid_argument("model/instance size mismatch");
  check_qubit_count(model.n(), "separation_report");
  const auto dim = static_cast<std::int64_t>(std::uint64_t{1} << model.n());
  double max_f = -std::numeric_limits<double>::infinity();
  double min_i = std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(static) reduction(max : max_f) reduction(min : min_i)
  for (std::int64_t b = 0; b < dim; ++b) {
    const double e = model.energy_at(static_cast<std::uint64_t>(b));
    if (decode(instance, static_cast<std::uint64_t>(b)).feasible())
      max_f = std::max(max_f, e);
    else
      min_i = std::min(min_i, e);
  }
  return finish(max_f, min_i);
}

void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
  out << "index,bitstring,energy,class\n";
  for (const SpectrumEntry& e : s.entries)
    out << fmt::format("{},{},{:.17g},{}\n", e.index, bitstring(e.index, s.n), e.energy, to_string(e.cls));
}

}  // namespace qwb
