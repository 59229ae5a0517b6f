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

// Instance files and the built-in problems the CLI knows by name.

#include <iosfwd>
#include <optional>
#include <string>

#include "qwb/boost_design.hpp"
#include "qwb/pbool.hpp"

namespace qwb {

/// Catalog values are stored in SI; the JSON uses "uH" / "uF".
struct InstanceFile {
  ConverterSpec spec;
  ComponentCatalog catalog;
  std::optional<PenaltyWeights> weights;
  /// Weights were given without M5/M6; those come from the tuner.
  bool tune_m5_m6 = false;
};

/// Throws ConfigError on malformed input.
InstanceFile parse_instance_json(const std::string& text);
InstanceFile load_instance_file(const std::string& path);
void write_instance_json(std::ostream& out, const InstanceFile& f);

/// Reads a weights object, either bare `{"M1":..}` or nested under "weights".
/// Missing keys keep the defaults.
PenaltyWeights load_weights_file(const std::string& path);

InstanceFile builtin_instance(int instance_number);  // 1, 2, 3

/// f(x) = -3 x0 - 3 x3 + 2 x0 x1 + 2 x1 x2 + 2 x2 x3.
QuboModel didactic_qubo();

/// A loaded problem, ready for enumeration or QAOA.
struct Problem {
  std::string name;
  std::optional<DesignInstance> design;  // empty for the didactic model
  PenaltyWeights weights;
  QuboModel qubo;
  IsingModel ising;

  int n() const { return qubo.n(); }
};

/// `name` is didactic, instance1..3 or a path to an instance JSON. Weights
/// come from `override`, else the file, else M1..M4 = 5 with M5/M6 tuned.
Problem load_problem(const std::string& name, const std::optional<PenaltyWeights>& override = {});

}  // namespace qwb
