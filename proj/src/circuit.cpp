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

#include "qwb/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>
#include <charconv>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace qwb {

std::string_view to_string(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::RX: return "rx";
    case GateKind::RZ: return "rz";
    case GateKind::RZZ: return "rzz";
    case GateKind::CX: return "cx";
  }
  return "?";
}

bool is_two_qubit(GateKind k) { return k == GateKind::RZZ || k == GateKind::CX; }
bool has_angle(GateKind k) { return k == GateKind::RX || k == GateKind::RZ || k == GateKind::RZZ; }

void Circuit::add(const GateOp& g) {
  for (int i = 0; i < g.arity(); ++i)
    if (g.qubits[static_cast<std::size_t>(i)] < 0 || g.qubits[static_cast<std::size_t>(i)] >= n_)
      throw std::out_of_range(fmt::format("{} on qubit {} outside [0, {})", to_string(g.kind),
                                          g.qubits[static_cast<std::size_t>(i)], n_));
  if (g.arity() == 2 && g.qubits[0] == g.qubits[1])
    throw std::invalid_argument(fmt::format("{} needs two distinct qubits", to_string(g.kind)));
  if (!std::isfinite(g.angle)) throw std::invalid_argument("gate angle must be finite");
  GateOp stored = g;
  if (stored.arity() == 1) stored.qubits[1] = stored.qubits[0];
  if (!has_angle(stored.kind)) stored.angle = 0.0;
  gates_.push_back(stored);
}

void Circuit::add_barrier() {
  if (barriers_.empty() || barriers_.back() != gates_.size()) barriers_.push_back(gates_.size());
}

Circuit build_qaoa_circuit(const IsingModel& m, const QaoaParams& params) {
  params.validate();
  Circuit c(m.n());
  for (int q = 0; q < m.n(); ++q) c.add(GateOp::one(GateKind::H, q));
  c.add_barrier();
  for (int j = 0; j < params.p(); ++j) {
    const double gamma = params.gamma[static_cast<std::size_t>(j)];
    const double beta = params.beta[static_cast<std::size_t>(j)];
    for (int q = 0; q < m.n(); ++q)
      if (m.h(q) != 0.0) c.add(GateOp::one(GateKind::RZ, q, 2.0 * gamma * m.h(q)));
    for (const auto& [ik, r] : m.couplings())
      if (r != 0.0) c.add(GateOp::two(GateKind::RZZ, ik.first, ik.second, 2.0 * gamma * r));
    for (int q = 0; q < m.n(); ++q) c.add(GateOp::one(GateKind::RX, q, 2.0 * beta));
    c.add_barrier();
  }
  return c;
}

Circuit decompose(const Circuit& c) {
  Circuit out(c.n());
  out.set_measured(c.measured());
  auto bar = c.barriers().begin();
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    for (; bar != c.barriers().end() && *bar == i; ++bar) out.add_barrier();
    const GateOp& g = c.gates()[i];
    const int a = g.qubits[0];
    const int b = g.qubits[1];
    switch (g.kind) {
      case GateKind::H:
      case GateKind::RZ:
      case GateKind::CX:
        out.add(g);
        break;
      case GateKind::RZZ:
        out.add(GateOp::two(GateKind::CX, a, b));
        out.add(GateOp::one(GateKind::RZ, b, g.angle));
        out.add(GateOp::two(GateKind::CX, a, b));
        break;
      case GateKind::RX:
        out.add(GateOp::one(GateKind::H, a));
        out.add(GateOp::one(GateKind::RZ, a, g.angle));
        out.add(GateOp::one(GateKind::H, a));
        break;
      case GateKind::X:
        out.add(GateOp::one(GateKind::H, a));
        out.add(GateOp::one(GateKind::RZ, a, std::numbers::pi));
        out.add(GateOp::one(GateKind::H, a));
        break;
      default:
        throw std::invalid_argument("decompose: unknown gate kind");
    }
  }
  if (bar != c.barriers().end()) out.add_barrier();
  return out;
}

int depth(const Circuit& c) {
  std::vector<int> level(static_cast<std::size_t>(c.n()), 0);
  int d = 0;
  auto bar = c.barriers().begin();
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    for (; bar != c.barriers().end() && *bar == i; ++bar) std::fill(level.begin(), level.end(), d);
    const GateOp& g = c.gates()[i];
    int l = 0;
    for (int i = 0; i < g.arity(); ++i) l = std::max(l, level[static_cast<std::size_t>(g.qubits[static_cast<std::size_t>(i)])]);
    ++l;
    for (int i = 0; i < g.arity(); ++i) level[static_cast<std::size_t>(g.qubits[static_cast<std::size_t>(i)])] = l;
    d = std::max(d, l);
  }
  return d;
}

int two_qubit_count(const Circuit& c) {
  return static_cast<int>(std::count_if(c.gates().begin(), c.gates().end(),
                                        [](const GateOp& g) { return g.arity() == 2; }));
}

std::map<GateKind, int> gate_census(const Circuit& c) {
  std::map<GateKind, int> out;
  for (const GateOp& g : c.gates()) ++out[g.kind];
  return out;
}

StateVector simulate(const Circuit& c, StateVector s) {
  if (s.n() != c.n()) throw std::invalid_argument("initial state size does not match the circuit");
  for (const GateOp& g : c.gates()) {
    const int a = g.qubits[0];
    const int b = g.qubits[1];
    switch (g.kind) {
      case GateKind::H: s.apply_inplace(Gate1::H, a); break;
      case GateKind::X: s.apply_inplace(Gate1::X, a); break;
      case GateKind::RX: s.apply_inplace(Gate1::RX, a, g.angle); break;
      case GateKind::RZ: s.apply_inplace(Gate1::RZ, a, g.angle); break;
      case GateKind::RZZ: s.apply_inplace(Gate2::RZZ, a, b, g.angle); break;
      case GateKind::CX: s.apply_inplace(Gate2::CX, a, b); break;
    }
  }
  return s;
}

StateVector simulate(const Circuit& c) { return simulate(c, StateVector::zero(c.n())); }

// ---- OpenQASM 2.0 -------------------------------------------------------------

std::string export_qasm(const Circuit& c) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out += fmt::format("qreg q[{}];\ncreg c[{}];\n", c.n(), c.n());
  auto emit = [&out](const GateOp& g) {
    if (has_angle(g.kind)) out += fmt::format("{}({:.17g}) ", to_string(g.kind), g.angle);
    else out += fmt::format("{} ", to_string(g.kind));
    if (g.arity() == 2) out += fmt::format("q[{}],q[{}];\n", g.qubits[0], g.qubits[1]);
    else out += fmt::format("q[{}];\n", g.qubits[0]);
  };
  auto bar = c.barriers().begin();
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    for (; bar != c.barriers().end() && *bar == i; ++bar) out += "barrier q;\n";
    const GateOp& g = c.gates()[i];
    if (g.kind == GateKind::RZZ) {
      emit(GateOp::two(GateKind::CX, g.qubits[0], g.qubits[1]));
      emit(GateOp::one(GateKind::RZ, g.qubits[1], g.angle));
      emit(GateOp::two(GateKind::CX, g.qubits[0], g.qubits[1]));
    } else {
      emit(g);
    }
  }
  if (bar != c.barriers().end()) out += "barrier q;\n";
  if (c.measured()) out += "measure q -> c;\n";
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument(fmt::format("qasm: bad integer in '{}'", line));
  return v;
}

// "q[3]" -> 3
int parse_qubit(std::string_view s, std::string_view line) {
  s = trim(s);
  if (s.size() < 4 || s.substr(0, 2) != "q[" || s.back() != ']')
    throw std::invalid_argument(fmt::format("qasm: bad qubit operand in '{}'", line));
  return parse_int(s.substr(2, s.size() - 3), line);
}

double parse_angle(std::string_view s, std::string_view line) {
  const std::string text(trim(s));
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw std::invalid_argument(fmt::format("qasm: bad angle in '{}'", line));
  return v;
}

}  // namespace

Circuit parse_qasm(std::string_view text) {
  int n = -1;
  Circuit c;
  std::vector<GateOp> pending;
  std::vector<std::size_t> barriers;
  bool measured = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) {
      if (!trim(text.substr(pos)).empty()) throw std::invalid_argument("qasm: statement without ';'");
      break;
    }
    const std::string_view stmt = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (stmt.empty() || stmt.starts_with("OPENQASM") || stmt.starts_with("include") || stmt.starts_with("creg"))
      continue;
    if (stmt.starts_with("qreg")) {
      const auto open = stmt.find('[');
      const auto close = stmt.find(']');
      if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        throw std::invalid_argument(fmt::format("qasm: bad register declaration '{}'", stmt));
      n = parse_int(stmt.substr(open + 1, close - open - 1), stmt);
      continue;
    }
    if (stmt.starts_with("barrier")) {
      barriers.push_back(pending.size());
      continue;
    }
    if (stmt.starts_with("measure")) {
      measured = true;
      continue;
    }
    // name[(angle)] operands
    std::size_t name_end = 0;
    while (name_end < stmt.size() && std::isalpha(static_cast<unsigned char>(stmt[name_end]))) ++name_end;
    const std::string_view name = stmt.substr(0, name_end);
    std::string_view rest = stmt.substr(name_end);
    double angle = 0.0;
    if (!rest.empty() && rest.front() == '(') {
      const auto close = rest.find(')');
      if (close == std::string_view::npos) throw std::invalid_argument(fmt::format("qasm: unclosed '(' in '{}'", stmt));
      angle = parse_angle(rest.substr(1, close - 1), stmt);
      rest = rest.substr(close + 1);
    }
    GateKind kind;
    if (name == "h") kind = GateKind::H;
    else if (name == "x") kind = GateKind::X;
    else if (name == "rx") kind = GateKind::RX;
    else if (name == "rz") kind = GateKind::RZ;
    else if (name == "rzz") kind = GateKind::RZZ;
    else if (name == "cx") kind = GateKind::CX;
    else throw std::invalid_argument(fmt::format("qasm: unsupported statement '{}'", stmt));
    if (is_two_qubit(kind)) {
      const auto comma = rest.find(',');
      if (comma == std::string_view::npos) throw std::invalid_argument(fmt::format("qasm: '{}' needs two operands", stmt));
      pending.push_back(GateOp::two(kind, parse_qubit(rest.substr(0, comma), stmt),
                                    parse_qubit(rest.substr(comma + 1), stmt), angle));
    } else {
      pending.push_back(GateOp::one(kind, parse_qubit(rest, stmt), angle));
    }
  }
  if (n < 0) throw std::invalid_argument("qasm: no qreg declaration");
  c = Circuit(n);
  auto bar = barriers.begin();
  for (std::size_t i = 0; i < pending.size(); ++i) {
    for (; bar != barriers.end() && *bar == i; ++bar) c.add_barrier();
    c.add(pending[i]);
  }
  if (bar != barriers.end()) c.add_barrier();
  c.set_measured(measured);
  return c;
}

}  // namespace qwb
