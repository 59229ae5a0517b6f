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

// qwb: command-line front end for the QUBO workbench.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "qwb/errors.hpp"
#include "qwb/experiment.hpp"
#include "qwb/parallel.hpp"

namespace {

using namespace qwb;

int parse_int(const std::string& s, const char* what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ConfigError(fmt::format("bad {} '{}'", what, s));
  return v;
}

// "A..B" or a single "N".
std::pair<int, int> parse_p_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int p = parse_int(s, "p");
    return {p, p};
  }
  return {parse_int(s.substr(0, dots), "p range start"), parse_int(s.substr(dots + 2), "p range end")};
}

void write_didactic_ising(const Problem& pr, const std::filesystem::path& dir) {
  nlohmann::ordered_json j;
  j["offset"] = pr.ising.offset();
  j["h"] = pr.ising.fields();
  auto& r = j["couplings"] = nlohmann::ordered_json::array();
  for (const auto& [ij, v] : pr.ising.couplings()) r.push_back({ij.first, ij.second, v});
  std::filesystem::create_directories(dir);
  std::ofstream f(dir / "ising.json");
  if (!f) throw std::runtime_error("cannot write ising.json");
  f << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QUBO/QAOA workbench for constrained design problems"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string out = ".";
  int threads = 0;
  bool no_plots = false;
  app.add_option("--seed", seed, "Seed for random initial angles and shot sampling");
  app.add_option("--out", out, "Output directory");
  app.add_option("--threads", threads, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_flag("--no-plots", no_plots, "Skip SVG output");

  std::string instance;
  std::string weights_path;
  const auto common = [&](CLI::App* sub, bool weights) {
    sub->fallthrough();
    sub->add_option("instance", instance, "didactic, instance1..3 or an instance JSON file")->required();
    if (weights) sub->add_option("--weights", weights_path, "JSON file with M1..M6");
  };

  auto* spectrum = app.add_subcommand("spectrum", "Enumerate and classify every assignment");
  common(spectrum, true);

  auto* tune = app.add_subcommand("tune", "Choose M5/M6 by the separation LP");
  common(tune, true);
  double bound = kDefaultWeightBound;
  tune->add_option("--bound", bound, "Upper bound on M5 and M6")->check(CLI::NonNegativeNumber);

  auto* train = app.add_subcommand("train", "Train QAOA for a range of depths and report merits");
  common(train, true);
  std::string p_range = "1..3";
  TrainConfig tc;
  std::uint64_t shots = 0;
  train->add_option("--p", p_range, "Depth or range A..B");
  train->add_option("--iters", tc.max_iters, "Adam steps per depth");
  train->add_option("--lr", tc.step_size, "Adam step size");
  train->add_flag("--random-init", tc.random_init, "Seeded uniform initial angles");
  train->add_option("--shots", shots, "Also sample each trained state");

  auto* landscape = app.add_subcommand("landscape", "Scan the p=1 expectation over a grid");
  common(landscape, true);
  int points = 100;
  landscape->add_option("--points", points, "Grid points per axis")->check(CLI::PositiveNumber);

  auto* circuit = app.add_subcommand("circuit", "Export the QAOA ansatz as OpenQASM");
  common(circuit, true);
  int circuit_p = 1;
  bool decompose_flag = false;
  bool train_first = false;
  circuit->add_option("--p", circuit_p, "Number of layers")->check(CLI::PositiveNumber);
  circuit->add_flag("--decompose", decompose_flag, "Rewrite into H, RZ and CX");
  circuit->add_flag("--train", train_first, "Use trained angles instead of the initial ones");

  auto* didactic = app.add_subcommand("didactic", "Four-variable walkthrough: Ising form, spectrum, QAOA p=1..3");
  didactic->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  try {
    set_num_threads(threads);
    const std::filesystem::path dir(out);
    std::optional<PenaltyWeights> weights;
    if (!weights_path.empty()) weights = load_weights_file(weights_path);
    const bool plots = !no_plots;

    if (*spectrum) {
      const Problem pr = load_problem(instance, weights);
      const Spectrum s = write_spectrum(pr, dir, plots);
      const auto gs = ground_states(s);
      fmt::print("{}: {} states, ground state {}\n", pr.name, s.entries.size(), gs.empty() ? 0 : gs.front());
    } else if (*tune) {
      const Problem pr = load_problem(instance, weights);
      const TuneResult r = write_tune(pr, dir, bound);
      fmt::print("M5 = {:.6g}, M6 = {:.6g}, gap = {:.6g}, separation {}\n", r.M5, r.M6, r.gap,
                 r.separation_ok ? "ok" : "FAILED");
    } else if (*train) {
      ExperimentConfig cfg;
      cfg.instance = instance;
      std::tie(cfg.p_min, cfg.p_max) = parse_p_range(p_range);
      cfg.train = tc;
      cfg.weights = weights;
      if (shots > 0) cfg.shots = shots;
      cfg.seed = seed;
      cfg.out_dir = dir;
      cfg.plots = plots;
      const MeritReport rep = run_experiment(cfg);
      for (const auto& r : rep.rows)
        fmt::print("p={:2d}  <H>={:.6f}  P(opt)={:.4f}  P(feas)={:.4f}  top={} ({})\n", r.p, r.expectation,
                   r.prob_optimal, r.prob_feasible, r.most_probable_index, to_string(r.most_probable_class));
    } else if (*landscape) {
      const Problem pr = load_problem(instance, weights);
      const Landscape land = write_landscape(pr, points, dir, plots);
      const auto [i, j] = land.argmin();
      fmt::print("minimum {:.6f} at beta={:.6f}, gamma={:.6f}\n", land.at(i, j), land.betas[i], land.gammas[j]);
    } else if (*circuit) {
      const Problem pr = load_problem(instance, weights);
      TrainConfig cfg;
      cfg.seed = seed;
      const QaoaParams params =
          train_first ? train_adam(pr.ising, circuit_p, cfg).final_params : initial_params(circuit_p, cfg);
      const CircuitStats st = write_circuit(pr, params, decompose_flag, dir);
      fmt::print("n={} p={} depth={} two-qubit gates={} gates={}\n", st.n, st.p, st.depth, st.two_qubit_count,
                 st.gate_count);
    } else if (*didactic) {
      const Problem pr = load_problem("didactic");
      write_didactic_ising(pr, dir);
      const Spectrum s = write_spectrum(pr, dir, plots);
      ExperimentConfig cfg;
      cfg.instance = "didactic";
      cfg.p_min = 1;
      cfg.p_max = 3;
      cfg.seed = seed;
      cfg.out_dir = dir;
      cfg.plots = plots;
      const MeritReport rep = run_experiment(cfg);
      fmt::print("ground state {} ({})\n", ground_states(s).front(), bitstring(ground_states(s).front(), 4));
      for (const auto& r : rep.rows)
        fmt::print("p={}  <H>={:.4f}  P(1001)={:.4f}\n", r.p, r.expectation, r.prob_optimal);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InfeasibleInstance& e) {
    std::cerr << "infeasible instance: " << e.what() << '\n';
    return 3;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
