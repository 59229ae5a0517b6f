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

#include "qwb/instance_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "qwb/errors.hpp"
#include "qwb/weight_tuner.hpp"

namespace qwb {

using nlohmann::json;

namespace {

double number(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(fmt::format("instance: \"{}\" must be a number", key));
  return v.get<double>();
}

std::vector<Component> components(const json& root, const char* list, const char* unit, double scale) {
  if (!root.contains(list) || !root.at(list).is_array())
    throw ConfigError(fmt::format("instance: missing array \"{}\"", list));
  std::vector<Component> out;
  for (const json& item : root.at(list)) {
    if (!item.is_object() || !item.contains(unit) || !item.contains("cost"))
      throw ConfigError(fmt::format("instance: each entry of \"{}\" needs \"{}\" and \"cost\"", list, unit));
    out.push_back({number(item, unit, 0.0) * scale, number(item, "cost", 0.0)});
  }
  return out;
}

// Second member: whether M5 or M6 was given explicitly.
std::pair<PenaltyWeights, bool> weights_from(const json& w) {
  if (!w.is_object()) throw ConfigError("weights must be an object");
  PenaltyWeights out;
  out.M1 = number(w, "M1", out.M1);
  out.M2 = number(w, "M2", out.M2);
  out.M3 = number(w, "M3", out.M3);
  out.M4 = number(w, "M4", out.M4);
  out.M5 = number(w, "M5", out.M5);
  out.M6 = number(w, "M6", out.M6);
  try {
    out.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  return {out, w.contains("M5") || w.contains("M6")};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open {}", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("malformed JSON: {}", e.what()));
  }
}

}  // namespace

InstanceFile parse_instance_json(const std::string& text) {
  const json root = parse(text);
  if (!root.is_object()) throw ConfigError("instance: top level must be an object");
  InstanceFile f;
  if (root.contains("spec")) {
    const json& s = root.at("spec");
    if (!s.is_object()) throw ConfigError("instance: \"spec\" must be an object");
    f.spec.v_s = number(s, "v_s", f.spec.v_s);
    f.spec.R = number(s, "R", f.spec.R);
    f.spec.d = number(s, "d", f.spec.d);
    f.spec.f_sw = number(s, "f_sw", f.spec.f_sw);
    f.spec.di_max = number(s, "di_max", f.spec.di_max);
    f.spec.dv_max = number(s, "dv_max", f.spec.dv_max);
    f.spec.kappa = number(s, "kappa", f.spec.kappa);
  }
  f.catalog.inductors = components(root, "inductors", "uH", 1e-6);
  f.catalog.capacitors = components(root, "capacitors", "uF", 1e-6);
  try {
    f.spec.validate();
    f.catalog.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(fmt::format("instance: {}", e.what()));
  }
  if (root.contains("weights")) {
    auto [w, explicit_m56] = weights_from(root.at("weights"));
    f.weights = w;
    f.tune_m5_m6 = !explicit_m56;
  }
  return f;
}

InstanceFile load_instance_file(const std::string& path) { return parse_instance_json(slurp(path)); }

void write_instance_json(std::ostream& out, const InstanceFile& f) {
  nlohmann::ordered_json j;
  j["spec"] = {{"v_s", f.spec.v_s},   {"R", f.spec.R},           {"d", f.spec.d},
               {"f_sw", f.spec.f_sw}, {"di_max", f.spec.di_max}, {"dv_max", f.spec.dv_max},
               {"kappa", f.spec.kappa}};
  auto& ind = j["inductors"] = nlohmann::ordered_json::array();
  for (const auto& c : f.catalog.inductors) ind.push_back({{"uH", c.value * 1e6}, {"cost", c.cost}});
  auto& cap = j["capacitors"] = nlohmann::ordered_json::array();
  for (const auto& c : f.catalog.capacitors) cap.push_back({{"uF", c.value * 1e6}, {"cost", c.cost}});
  if (f.weights && f.tune_m5_m6) {
    const auto& w = *f.weights;
    j["weights"] = {{"M1", w.M1}, {"M2", w.M2}, {"M3", w.M3}, {"M4", w.M4}};
  } else if (f.weights) {
    const auto& w = *f.weights;
    j["weights"] = {{"M1", w.M1}, {"M2", w.M2}, {"M3", w.M3}, {"M4", w.M4}, {"M5", w.M5}, {"M6", w.M6}};
  }
  out << j.dump(2) << '\n';
}

PenaltyWeights load_weights_file(const std::string& path) {
  const json root = parse(slurp(path));
  if (!root.is_object()) throw ConfigError("weights file: top level must be an object");
  return weights_from(root.contains("weights") ? root.at("weights") : root).first;
}

InstanceFile builtin_instance(int instance_number) {
  InstanceFile f;
  f.spec = reference_spec();
  f.catalog = reference_catalog(instance_number);
  f.weights = reference_weights(instance_number);
  return f;
}

QuboModel didactic_qubo() {
  QuboModel q(4);
  q.add_linear(0, -3.0);
  q.add_linear(3, -3.0);
  q.add_product(0, 1, 2.0);
  q.add_product(1, 2, 2.0);
  q.add_product(2, 3, 2.0);
  return q;
}

Problem load_problem(const std::string& name, const std::optional<PenaltyWeights>& override) {
  if (name == "didactic") {
    Problem p{name, std::nullopt, PenaltyWeights{}, didactic_qubo(), IsingModel{}};
    p.ising = qubo_to_ising(p.qubo);
    return p;
  }
  InstanceFile f;
  if (name == "instance1" || name == "instance2" || name == "instance3") {
    f = builtin_instance(name.back() - '0');
  } else {
    f = load_instance_file(name);
  }
  DesignInstance inst = preprocess(f.catalog, f.spec);
  check_qubit_count(inst.num_qubits(), "instance");

  PenaltyWeights w;
  if (override) {
    w = *override;
  } else if (f.weights && !f.tune_m5_m6) {
    w = *f.weights;
  } else {
    if (f.weights) w = *f.weights;
    w.M5 = w.M6 = 0.0;
    const TuneResult t = tune_weights(inst, w);
    w.M5 = t.M5;
    w.M6 = t.M6;
  }
  DesignQubo dq = build_qubo(inst, w);
  Problem p{name, std::move(inst), w, std::move(dq.model), IsingModel{}};
  p.ising = qubo_to_ising(p.qubo);
  return p;
}

}  // namespace qwb
