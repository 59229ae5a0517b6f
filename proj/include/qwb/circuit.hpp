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

// Gate-level QAOA circuits: construction, rewriting to {H, RZ, CX}, depth and
// two-qubit counts on all-to-all logical connectivity, and OpenQASM 2.0 text.

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qwb/pbool.hpp"
#include "qwb/qaoa.hpp"
#include "qwb/statevec.hpp"

namespace qwb {

enum class GateKind { H, X, RX, RZ, RZZ, CX };

std::string_view to_string(GateKind k);
bool is_two_qubit(GateKind k);
bool has_angle(GateKind k);

struct GateOp {
  GateKind kind;
  std::array<int, 2> qubits{0, 0};  // second entry unused for one-qubit gates; CX is (control, target)
  double angle = 0.0;

  static GateOp one(GateKind kind, int q, double angle = 0.0) { return {kind, {q, q}, angle}; }
  static GateOp two(GateKind kind, int a, int b, double angle = 0.0) { return {kind, {a, b}, angle}; }

  int arity() const { return is_two_qubit(kind) ? 2 : 1; }
  friend bool operator==(const GateOp&, const GateOp&) = default;
};

class Circuit {
 public:
  explicit Circuit(int n = 0) : n_(n) {}

  int n() const { return n_; }
  const std::vector<GateOp>& gates() const { return gates_; }
  bool measured() const { return measure_; }
  void set_measured(bool m) { measure_ = m; }

  /// Validates qubit range, distinctness and a finite angle.
  void add(const GateOp& g);

  /// A barrier across all qubits before the next gate. It is not a gate: it
  /// only stops depth() from packing gates across it.
  void add_barrier();
  /// Gate positions that have a barrier in front of them, ascending.
  const std::vector<std::size_t>& barriers() const { return barriers_; }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_;
  std::vector<GateOp> gates_;
  std::vector<std::size_t> barriers_;
  bool measure_ = false;
};

/// H on every qubit, then per layer RZ(2 gamma h_i) for nonzero fields in
/// qubit order, RZZ(2 gamma r_ik) for nonzero couplings in (i, k) order, and
/// RX(2 beta) on every qubit. A barrier follows the H block and every layer.
Circuit build_qaoa_circuit(const IsingModel& m, const QaoaParams& params);

/// Rewrites into {H, RZ, CX}: RZZ(t) -> CX RZ(t) CX, RX(t) -> H RZ(t) H,
/// X -> H RZ(pi) H. Equal to the input up to global phase.
Circuit decompose(const Circuit& c);

/// Greedy as-soon-as-possible layering; gates sharing a qubit never share a
/// layer and no gate moves across a barrier.
int depth(const Circuit& c);
int two_qubit_count(const Circuit& c);
std::map<GateKind, int> gate_census(const Circuit& c);

StateVector simulate(const Circuit& c, StateVector initial);
StateVector simulate(const Circuit& c);

/// OpenQASM 2.0; RZZ gates are decomposed on the way out. Angles use 17
/// significant digits so parse_qasm() restores them exactly.
std::string export_qasm(const Circuit& c);
/// Reads back the dialect written by export_qasm().
Circuit parse_qasm(std::string_view text);

}  // namespace qwb
