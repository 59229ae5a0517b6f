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

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "qwb/circuit.hpp"
#include "qwb/instance_io.hpp"
#include "qwb/qaoa.hpp"

namespace qwb {
namespace {

using std::numbers::pi;

// Column b of the unitary: the circuit applied to |b>.
std::vector<std::vector<Complex>> unitary(const Circuit& c) {
  std::vector<std::vector<Complex>> cols;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << c.n()); ++b) {
    const StateVector s = simulate(c, StateVector::basis(c.n(), b));
    cols.emplace_back(s.amplitudes().begin(), s.amplitudes().end());
  }
  return cols;
}

// max |U - e^{i phi} V| with phi fixed by the largest entry of U.
double distance_up_to_phase(const std::vector<std::vector<Complex>>& u, const std::vector<std::vector<Complex>>& v) {
  std::size_t bc = 0, br = 0;
  double big = 0;
  for (std::size_t c = 0; c < u.size(); ++c)
    for (std::size_t r = 0; r < u[c].size(); ++r)
      if (std::abs(u[c][r]) > big) big = std::abs(u[c][r]), bc = c, br = r;
  const Complex phase = u[bc][br] / v[bc][br];
  double d = 0;
  for (std::size_t c = 0; c < u.size(); ++c)
    for (std::size_t r = 0; r < u[c].size(); ++r) d = std::max(d, std::abs(u[c][r] - phase * v[c][r]));
  return d;
}

Problem problem(const std::string& name) { return load_problem(name); }

TEST(Circuit, AddValidates) {
  Circuit c(2);
  EXPECT_THROW(c.add(GateOp::one(GateKind::H, 2)), std::out_of_range);
  EXPECT_THROW(c.add(GateOp::two(GateKind::CX, 1, 1)), std::invalid_argument);
  EXPECT_THROW(c.add(GateOp::one(GateKind::RZ, 0, NAN)), std::invalid_argument);
  c.add(GateOp::two(GateKind::CX, 0, 1));
  EXPECT_EQ(c.gates().size(), 1u);
}

TEST(Circuit, DidacticCensus) {
  const Problem d = problem("didactic");
  const Circuit c = build_qaoa_circuit(d.ising, QaoaParams::constant(1, 0.3));
  const auto census = gate_census(c);
  EXPECT_EQ(census.at(GateKind::H), 4);
  EXPECT_EQ(census.at(GateKind::RZ), 4);
  EXPECT_EQ(census.at(GateKind::RZZ), 3);
  EXPECT_EQ(census.at(GateKind::RX), 4);
  EXPECT_EQ(two_qubit_count(c), 3);
  EXPECT_EQ(two_qubit_count(decompose(c)), 6);
  for (const auto& [kind, count] : gate_census(decompose(c)))
    EXPECT_TRUE(kind == GateKind::H || kind == GateKind::RZ || kind == GateKind::CX) << to_string(kind);
}

TEST(Circuit, DepthIsAffineInLayers) {
  for (const char* name : {"didactic", "instance1"}) {
    const Problem pr = problem(name);
    for (bool dec : {false, true}) {
      std::vector<int> d;
      for (int p = 1; p <= 5; ++p) {
        Circuit c = build_qaoa_circuit(pr.ising, QaoaParams::constant(p, 0.2));
        if (dec) c = decompose(c);
        d.push_back(depth(c));
      }
      for (std::size_t k = 2; k < d.size(); ++k) EXPECT_EQ(d[k] - d[k - 1], d[1] - d[0]) << name;
      EXPECT_GT(d[1], d[0]);
    }
  }
}

TEST(Circuit, DepthOfSmallCircuits) {
  Circuit c(3);
  EXPECT_EQ(depth(c), 0);
  c.add(GateOp::one(GateKind::H, 0));
  c.add(GateOp::one(GateKind::H, 1));
  EXPECT_EQ(depth(c), 1);
  c.add(GateOp::two(GateKind::CX, 0, 1));
  c.add(GateOp::one(GateKind::H, 2));
  EXPECT_EQ(depth(c), 2);
  c.add(GateOp::two(GateKind::CX, 1, 2));
  EXPECT_EQ(depth(c), 3);
}

TEST(Circuit, BarrierBlocksPacking) {
  Circuit c(2);
  c.add(GateOp::one(GateKind::H, 0));
  c.add_barrier();
  c.add_barrier();
  c.add(GateOp::one(GateKind::H, 1));
  EXPECT_EQ(depth(c), 2);
  EXPECT_EQ(c.barriers(), std::vector<std::size_t>{1});
  EXPECT_EQ(c.gates().size(), 2u);
  const Circuit back = parse_qasm(export_qasm(c));
  EXPECT_EQ(back, c);
  EXPECT_EQ(decompose(c).barriers(), c.barriers());
}

TEST(Circuit, MatchesFastPathOnAllInstances) {
  for (const char* name : {"didactic", "instance1", "instance2", "instance3"}) {
    const Problem pr = problem(name);
    for (int p : {1, 2}) {
      QaoaParams prm = QaoaParams::constant(p, 0.0);
      for (int j = 0; j < p; ++j) {
        prm.beta[j] = 0.3 + 0.1 * j;
        prm.gamma[j] = -0.2 + 0.15 * j;
      }
      const StateVector fast = qaoa_state(pr.ising, prm);
      const Circuit c = build_qaoa_circuit(pr.ising, prm);
      EXPECT_NEAR(overlap_magnitude(fast, simulate(c)), 1.0, 1e-9) << name << " p=" << p;
      EXPECT_NEAR(overlap_magnitude(fast, simulate(decompose(c))), 1.0, 1e-9) << name << " p=" << p;
    }
  }
}

TEST(Decomposition, RzzIdentity) {
  for (double t : {0.3, -1.7, pi}) {
    Circuit a(2), b(2);
    a.add(GateOp::two(GateKind::RZZ, 0, 1, t));
    b.add(GateOp::two(GateKind::CX, 0, 1));
    b.add(GateOp::one(GateKind::RZ, 1, t));
    b.add(GateOp::two(GateKind::CX, 0, 1));
    EXPECT_LT(distance_up_to_phase(unitary(a), unitary(b)), 1e-12);
    EXPECT_LT(distance_up_to_phase(unitary(a), unitary(decompose(a))), 1e-12);
  }
}

TEST(Decomposition, RxAndXIdentities) {
  for (double t : {0.3, -1.7, pi}) {
    Circuit a(1), b(1);
    a.add(GateOp::one(GateKind::RX, 0, t));
    b.add(GateOp::one(GateKind::H, 0));
    b.add(GateOp::one(GateKind::RZ, 0, t));
    b.add(GateOp::one(GateKind::H, 0));
    EXPECT_LT(distance_up_to_phase(unitary(a), unitary(b)), 1e-12);
  }
  Circuit x(1);
  x.add(GateOp::one(GateKind::X, 0));
  EXPECT_LT(distance_up_to_phase(unitary(x), unitary(decompose(x))), 1e-12);
}

TEST(Qasm, RoundTrip) {
  const Problem pr = problem("instance1");
  QaoaParams prm{{0.123456789012345, -0.5}, {1.0 / 3.0, 2.718281828459045}};
  Circuit c = decompose(build_qaoa_circuit(pr.ising, prm));
  c.set_measured(true);
  const std::string text = export_qasm(c);
  EXPECT_EQ(text.rfind("OPENQASM 2.0;", 0), 0u);
  EXPECT_NE(text.find("measure q -> c;"), std::string::npos);
  EXPECT_EQ(parse_qasm(text), c);
  EXPECT_EQ(export_qasm(parse_qasm(text)), text);
}

TEST(Qasm, RzzExpandsOnExport) {
  Circuit c(2);
  c.add(GateOp::two(GateKind::RZZ, 0, 1, 0.5));
  const Circuit back = parse_qasm(export_qasm(c));
  EXPECT_EQ(back.gates().size(), 3u);
  EXPECT_LT(distance_up_to_phase(unitary(c), unitary(back)), 1e-12);
}

TEST(Qasm, RejectsGarbage) {
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;\nqreg q[2];\nccx q[0],q[1];\n"), std::invalid_argument);
  EXPECT_THROW(parse_qasm("h q[0];\n"), std::invalid_argument);
  EXPECT_THROW(parse_qasm("qreg q[1];\nrz(abc) q[0];\n"), std::invalid_argument);
  EXPECT_THROW(parse_qasm("qreg q[1];\nh q[3];\n"), std::out_of_range);
}

}  // namespace
}  // namespace qwb
