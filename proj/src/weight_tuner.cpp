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

#include "qwb/weight_tuner.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "qwb/errors.hpp"

namespace qwb {

EnergyDecomposition decompose_energies(const DesignInstance& instance, const PenaltyWeights& base,
                                       ResonanceUnits units) {
  check_qubit_count(instance.num_qubits(), "decompose_energies");
  PenaltyWeights w = base;
  w.M5 = 0.0;
  w.M6 = 0.0;
  const DesignQubo dq = build_qubo(instance, w, units);
  const Spectrum s = classify(enumerate(dq.model), instance);

  EnergyDecomposition dec;
  dec.n = instance.num_qubits();
  dec.base = w;
  dec.units = units;
  dec.entries.reserve(s.entries.size());
  for (const auto& e : s.entries) {
    const double g = instance.resonance_violation_at(e.index, units);
    dec.entries.push_back({e.index, e.energy, g, g * g, e.cls});
  }
  return dec;
}

namespace {

struct Candidate {
  double e0, e1, e2;
  std::uint64_t index;
};

// Keeps, per (e1, e2) pair, the entry with the extreme e0, then drops any
// candidate whose energy is bounded by another for every M5, M6 >= 0.
// `upper` selects the feasible side (largest energies matter).
std::vector<Candidate> supporting_set(std::vector<Candidate> c, bool upper) {
  std::map<std::pair<double, double>, Candidate> best;
  for (const auto& x : c) {
    auto [it, fresh] = best.try_emplace({x.e1, x.e2}, x);
    if (fresh) continue;
    Candidate& b = it->second;
    if (upper ? x.e0 > b.e0 : x.e0 < b.e0) b = x;
    else if (x.e0 == b.e0 && x.index < b.index) b = x;
  }
  std::vector<Candidate> grouped;
  grouped.reserve(best.size());
  for (auto& kv : best) grouped.push_back(kv.second);

  const auto covers = [upper](const Candidate& a, const Candidate& b) {
    // true if a makes b redundant
    if (upper) return a.e0 >= b.e0 && a.e1 >= b.e1 && a.e2 >= b.e2;
    return a.e0 <= b.e0 && a.e1 <= b.e1 && a.e2 <= b.e2;
  };
  std::vector<Candidate> kept;
  for (std::size_t k = 0; k < grouped.size(); ++k) {
    bool redundant = false;
    for (std::size_t j = 0; j < grouped.size() && !redundant; ++j)
      if (j != k && covers(grouped[j], grouped[k])) redundant = true;
    if (!redundant) kept.push_back(grouped[k]);
  }
  std::sort(kept.begin(), kept.end(),
            [](const Candidate& a, const Candidate& b) { return a.index < b.index; });
  return kept;
}

}  // namespace

SeparationLp build_separation_lp(const EnergyDecomposition& dec, double weight_upper_bound,
                                 bool prune) {
  if (!(weight_upper_bound >= 0.0))
    throw std::invalid_argument("build_separation_lp: weight upper bound must be >= 0");
  std::vector<Candidate> feas, infeas;
  for (const auto& e : dec.entries) {
    if (e.cls == SolutionClass::unclassified)
      throw std::invalid_argument("build_separation_lp: unclassified entry");
    (is_feasible(e.cls) ? feas : infeas).push_back({e.e0, e.e1, e.e2, e.index});
  }
  if (feas.empty() || infeas.empty())
    throw std::invalid_argument("build_separation_lp: need at least one feasible and one infeasible entry");

  SeparationLp out;
  out.raw_constraints = feas.size() + infeas.size();
  if (prune) {
    feas = supporting_set(std::move(feas), true);
    infeas = supporting_set(std::move(infeas), false);
  }

  LpProblem& lp = out.lp;
  lp.add_var("M5", 0.0, weight_upper_bound);
  lp.add_var("M6", 0.0, weight_upper_bound);
  lp.add_var("u", -kInf, kInf);
  lp.add_var("v", -kInf, kInf);
  lp.add_var("gap", -kInf, kInf, 1.0);

  for (const auto& c : feas) {
    lp.add_row({c.e1, c.e2, -1.0, 0.0, 0.0}, -c.e0);
    out.row_index.push_back(c.index);
    out.row_class.push_back(SolutionClass::feasible);
  }
  for (const auto& c : infeas) {
    lp.add_row({-c.e1, -c.e2, 0.0, 1.0, 0.0}, c.e0);
    out.row_index.push_back(c.index);
    out.row_class.push_back(SolutionClass::infeasible);
  }
  lp.add_row({0.0, 0.0, 1.0, -1.0, 1.0}, 0.0);
  return out;
}

TuneResult solve_lp(const SeparationLp& slp) {
  const LpSolution sol = solve_lp(slp.lp);
  if (sol.status != LpStatus::optimal)
    throw std::runtime_error(sol.status == LpStatus::unbounded ? "separation LP is unbounded"
                                                               : "separation LP is infeasible");
  TuneResult r;
  r.M5 = sol.x[col_m5];
  r.M6 = sol.x[col_m6];
  r.gap = sol.x[col_gap];
  r.separation_ok = r.gap > 0.0;
  r.raw_constraints = slp.raw_constraints;
  r.pruned_constraints = slp.row_index.size();
  for (int row : sol.active_rows)
    if (static_cast<std::size_t>(row) < slp.row_index.size())
      r.active.push_back({slp.row_index[row], slp.row_class[row]});
  return r;
}

TuneResult tune_weights(const DesignInstance& instance, const PenaltyWeights& base,
                        double weight_upper_bound, ResonanceUnits units) {
  return solve_lp(build_separation_lp(decompose_energies(instance, base, units), weight_upper_bound));
}

void write_tune_json(std::ostream& out, const TuneResult& r) {
  nlohmann::ordered_json j;
  j["M5"] = r.M5;
  j["M6"] = r.M6;
  j["gap"] = r.gap;
  j["separation_ok"] = r.separation_ok;
  j["raw_constraints"] = r.raw_constraints;
  j["pruned_constraints"] = r.pruned_constraints;
  auto& act = j["active"] = nlohmann::ordered_json::array();
  for (const auto& a : r.active)
    act.push_back({{"index", a.index}, {"class", std::string(to_string(a.cls))}});
  out << j.dump(2) << '\n';
}

}  // namespace qwb
