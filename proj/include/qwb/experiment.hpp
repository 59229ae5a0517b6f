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

// End-to-end runs behind the command-line tool. Each function writes its CSV
// (and SVG) artifacts into an output directory and returns the numbers.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qwb/instance_io.hpp"
#include "qwb/oracle.hpp"
#include "qwb/qaoa.hpp"
#include "qwb/weight_tuner.hpp"

namespace qwb {

struct ExperimentConfig {
  std::string instance = "instance1";  // built-in name or JSON path
  int p_min = 1;
  int p_max = 1;
  TrainConfig train;
  std::optional<PenaltyWeights> weights;
  std::optional<std::uint64_t> shots;  // sample the trained states as well
  std::uint64_t seed = 0;
  std::filesystem::path out_dir = ".";
  bool plots = true;

  /// Throws ConfigError.
  void validate() const;
};

struct MeritRow {
  int p = 0;
  double expectation = 0.0;
  double prob_optimal = 0.0;
  double prob_feasible = 0.0;
  double cop = 0.0;
  std::int64_t tts = 0;
  std::uint64_t most_probable_index = 0;
  SolutionClass most_probable_class = SolutionClass::unclassified;
  QaoaParams params;
  std::optional<double> shot_prob_optimal;
  std::optional<double> shot_prob_feasible;
};

struct MeritReport {
  std::string instance;
  int n = 0;
  std::vector<MeritRow> rows;
};

/// Every basis state classified: design instances against the oracle,
/// the didactic model with classify_unconstrained().
Spectrum classified_spectrum(const Problem& problem);

/// Trains p = p_min..p_max and writes merits.csv, probs_p<p>.csv,
/// params.csv and expectations.csv (plus shots_p<p>.csv and SVGs when
/// enabled). Files already written are removed if a later step throws.
MeritReport run_experiment(const ExperimentConfig& config);

/// spectrum.csv and spectrum.svg; returns the classified spectrum.
Spectrum write_spectrum(const Problem& problem, const std::filesystem::path& out_dir, bool plots = true);

/// tune.json; base weights M1..M4 from `problem`.
TuneResult write_tune(const Problem& problem, const std::filesystem::path& out_dir,
                      double weight_upper_bound = kDefaultWeightBound);

/// landscape.csv with header `beta,gamma,expectation`, points x points rows.
Landscape write_landscape(const Problem& problem, int points, const std::filesystem::path& out_dir,
                          bool plots = true);

struct CircuitStats {
  int n = 0;
  int p = 0;
  int depth = 0;
  int two_qubit_count = 0;
  int gate_count = 0;
  bool decomposed = false;
};

/// ansatz.qasm and stats.json for the given angles.
CircuitStats write_circuit(const Problem& problem, const QaoaParams& params, bool decomposed,
                           const std::filesystem::path& out_dir);

}  // namespace qwb
