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

#include "qwb/experiment.hpp"

#include <algorithm>
#include <fstream>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "qwb/circuit.hpp"
#include "qwb/errors.hpp"
#include "qwb/merit.hpp"
#include "qwb/svg.hpp"

namespace qwb {

namespace fs = std::filesystem;

void ExperimentConfig::validate() const {
  if (p_min < 1) throw ConfigError("p range must start at 1 or above");
  if (p_max < p_min) throw ConfigError(fmt::format("empty p range {}..{}", p_min, p_max));
  if (shots && *shots == 0) throw ConfigError("shots must be positive");
  try {
    train.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

namespace {

// Tracks files written by one command and deletes them unless commit() is reached.
class Artifacts {
 public:
  explicit Artifacts(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }
  Artifacts(const Artifacts&) = delete;
  Artifacts& operator=(const Artifacts&) = delete;
  ~Artifacts() {
    if (committed_) return;
    std::error_code ec;
    for (const auto& p : written_)
      if (fs::is_regular_file(p, ec)) fs::remove(p, ec);
  }

  fs::path path(const std::string& name) {
    written_.push_back(dir_ / name);
    return written_.back();
  }

  std::ofstream open(const std::string& name) {
    const fs::path p = path(name);
    std::ofstream f(p);
    if (!f) throw std::runtime_error(fmt::format("cannot write {}", p.string()));
    return f;
  }

  void commit() { committed_ = true; }

 private:
  fs::path dir_;
  std::vector<fs::path> written_;
  bool committed_ = false;
};

std::string tts_text(std::int64_t t) { return t == kTtsInfinite ? "inf" : std::to_string(t); }

}  // namespace

Spectrum classified_spectrum(const Problem& problem) {
  Spectrum s = enumerate(problem.qubo);
  return problem.design ? classify(std::move(s), *problem.design) : classify_unconstrained(std::move(s));
}

MeritReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  const Problem problem = load_problem(config.instance, config.weights);
  const Spectrum spectrum = classified_spectrum(problem);
  const CostHamiltonian h(problem.ising);
  const int n = problem.n();

  Artifacts files(config.out_dir);
  MeritReport report{config.instance, n, {}};
  TrainConfig tc = config.train;
  tc.seed = config.seed;

  for (int p = config.p_min; p <= config.p_max; ++p) {
    const TrainTrace trace = train_adam(h, p, tc);
    const StateVector psi = qaoa_state(h, trace.final_params);
    const std::vector<double> probs = probabilities(psi);

    MeritRow row;
    row.p = p;
    row.params = trace.final_params;
    row.expectation = trace.final_expectation;
    for (const auto& e : spectrum.entries) {
      if (e.cls == SolutionClass::optimal) row.prob_optimal += probs[e.index];
      if (is_feasible(e.cls)) row.prob_feasible += probs[e.index];
    }
    row.prob_optimal = std::clamp(row.prob_optimal, 0.0, 1.0);
    row.prob_feasible = std::clamp(row.prob_feasible, 0.0, 1.0);
    row.most_probable_index =
        static_cast<std::uint64_t>(std::max_element(probs.begin(), probs.end()) - probs.begin());
    row.most_probable_class = spectrum.entries[row.most_probable_index].cls;
    row.cop = cop(row.prob_optimal, n);
    row.tts = tts(row.prob_optimal);

    {
      auto f = files.open(fmt::format("probs_p{}.csv", p));
      f << "index,bitstring,probability,energy,class\n";
      for (const auto& e : spectrum.entries)
        fmt::print(f, "{},{},{:.17g},{:.17g},{}\n", e.index, bitstring(e.index, n), probs[e.index],
                   e.energy, to_string(e.cls));
    }
    if (config.shots) {
      const ShotCounts sc = sample(psi, *config.shots, config.seed + static_cast<std::uint64_t>(p));
      std::uint64_t hit_opt = 0, hit_feas = 0;
      auto f = files.open(fmt::format("shots_p{}.csv", p));
      f << "index,bitstring,count,class\n";
      for (const auto& [idx, cnt] : sc.counts) {
        const SolutionClass c = spectrum.entries[idx].cls;
        if (c == SolutionClass::optimal) hit_opt += cnt;
        if (is_feasible(c)) hit_feas += cnt;
        fmt::print(f, "{},{},{},{}\n", idx, bitstring(idx, n), cnt, to_string(c));
      }
      row.shot_prob_optimal = static_cast<double>(hit_opt) / static_cast<double>(sc.total);
      row.shot_prob_feasible = static_cast<double>(hit_feas) / static_cast<double>(sc.total);
    }
    report.rows.push_back(std::move(row));
  }

  {
    auto f = files.open("merits.csv");
    f << "p,prob_optimal,prob_feasible,cop,tts,most_probable_index,most_probable_class\n";
    for (const auto& r : report.rows)
      fmt::print(f, "{},{:.17g},{:.17g},{:.17g},{},{},{}\n", r.p, r.prob_optimal, r.prob_feasible, r.cop,
                 tts_text(r.tts), r.most_probable_index, to_string(r.most_probable_class));
  }
  {
    auto f = files.open("expectations.csv");
    f << "p,expectation\n";
    for (const auto& r : report.rows) fmt::print(f, "{},{:.17g}\n", r.p, r.expectation);
  }
  {
    auto f = files.open("params.csv");
    f << "p,layer,beta,gamma\n";
    for (const auto& r : report.rows)
      for (int k = 0; k < r.p; ++k)
        fmt::print(f, "{},{},{:.17g},{:.17g}\n", r.p, k + 1, r.params.beta[k], r.params.gamma[k]);
  }
  if (config.plots) {
    svg::Series opt{"P(optimal)", {}, {}}, feas{"P(feasible)", {}, {}}, cp{"CoP", {}, {}},
        tt{"TTS", {}, {}};
    for (const auto& r : report.rows) {
      const double p = r.p;
      opt.x.push_back(p);
      opt.y.push_back(r.prob_optimal);
      feas.x.push_back(p);
      feas.y.push_back(r.prob_feasible);
      cp.x.push_back(p);
      cp.y.push_back(r.cop);
      if (r.tts != kTtsInfinite) {
        tt.x.push_back(p);
        tt.y.push_back(static_cast<double>(r.tts));
      }
    }
    svg::save_xy(files.path("probabilities.svg").string(),
                 {config.instance + ": QAOA success probability", "p", "probability", {opt, feas}});
    svg::save_xy(files.path("merits.svg").string(),
                 {config.instance + ": figures of merit", "p", "CoP / TTS (log)", {cp, tt}, true});
  }
  files.commit();
  return report;
}

Spectrum write_spectrum(const Problem& problem, const fs::path& out_dir, bool plots) {
  Spectrum s = classified_spectrum(problem);
  Artifacts files(out_dir);
  {
    auto f = files.open("spectrum.csv");
    write_spectrum_csv(f, s);
  }
  if (plots) {
    const Spectrum sorted = sorted_by_energy(s);
    svg::Series opt{"optimal", {}, {}, false}, feas{"feasible", {}, {}, false},
        inf{"infeasible", {}, {}, false};
    for (std::size_t rank = 0; rank < sorted.entries.size(); ++rank) {
      const auto& e = sorted.entries[rank];
      auto& target = e.cls == SolutionClass::optimal  ? opt
                     : e.cls == SolutionClass::feasible ? feas
                                                        : inf;
      target.x.push_back(static_cast<double>(rank));
      target.y.push_back(e.energy);
    }
    svg::save_xy(files.path("spectrum.svg").string(),
                 {problem.name + ": energy spectrum", "rank", "energy", {opt, feas, inf}});
  }
  files.commit();
  return s;
}

TuneResult write_tune(const Problem& problem, const fs::path& out_dir, double weight_upper_bound) {
  if (!problem.design) throw ConfigError("tune needs a design instance");
  const TuneResult r = tune_weights(*problem.design, problem.weights, weight_upper_bound);
  Artifacts files(out_dir);
  {
    auto f = files.open("tune.json");
    write_tune_json(f, r);
  }
  files.commit();
  return r;
}

Landscape write_landscape(const Problem& problem, int points, const fs::path& out_dir, bool plots) {
  if (points < 1) throw ConfigError("landscape needs at least one point per axis");
  LandscapeGrid grid;
  grid.beta_points = grid.gamma_points = points;
  const Landscape land = landscape_scan(CostHamiltonian(problem.ising), grid);
  Artifacts files(out_dir);
  {
    auto f = files.open("landscape.csv");
    f << "beta,gamma,expectation\n";
    for (std::size_t i = 0; i < land.betas.size(); ++i)
      for (std::size_t j = 0; j < land.gammas.size(); ++j)
        fmt::print(f, "{:.17g},{:.17g},{:.17g}\n", land.betas[i], land.gammas[j], land.at(i, j));
  }
  if (plots)
    svg::save_heatmap(files.path("landscape.svg").string(),
                      {problem.name + ": p=1 energy landscape", "gamma", "beta", land.gammas, land.betas,
                       land.values});
  files.commit();
  return land;
}

CircuitStats write_circuit(const Problem& problem, const QaoaParams& params, bool decomposed,
                           const fs::path& out_dir) {
  Circuit c = build_qaoa_circuit(problem.ising, params);
  if (decomposed) c = decompose(c);
  c.set_measured(true);
  CircuitStats st{problem.n(), params.p(), depth(c), two_qubit_count(c),
                  static_cast<int>(c.gates().size()), decomposed};
  Artifacts files(out_dir);
  {
    auto f = files.open("ansatz.qasm");
    f << export_qasm(c);
  }
  {
    nlohmann::ordered_json j;
    j["n"] = st.n;
    j["p"] = st.p;
    j["decomposed"] = st.decomposed;
    j["depth"] = st.depth;
    j["two_qubit_count"] = st.two_qubit_count;
    j["gate_count"] = st.gate_count;
    auto& census = j["census"] = nlohmann::ordered_json::object();
    for (const auto& [kind, count] : gate_census(c)) census[std::string(to_string(kind))] = count;
    auto f = files.open("stats.json");
    f << j.dump(2) << '\n';
  }
  files.commit();
  return st;
}

}  // namespace qwb
