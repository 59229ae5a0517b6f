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

#include <algorithm>
#include <set>
#include <sstream>

#include "qwb/instance_io.hpp"
#include "qwb/oracle.hpp"
#include "qwb/parallel.hpp"
#include "test_util.hpp"

namespace qwb {
namespace {

std::set<std::uint64_t> feasible_indices(const Spectrum& s) {
  std::set<std::uint64_t> out;
  for (const auto& e : s.entries)
    if (is_feasible(e.cls)) out.insert(e.index);
  return out;
}

Spectrum classified(int k) {
  const auto inst = preprocess(reference_catalog(k), reference_spec());
  return classify(enumerate(build_qubo(inst, reference_weights(k)).model), inst);
}

TEST(Enumerate, DidacticGroundState) {
  const Spectrum s = enumerate(didactic_qubo());
  ASSERT_EQ(s.entries.size(), 16u);
  EXPECT_EQ(ground_states(s), std::vector<std::uint64_t>{9});
  EXPECT_EQ(s.entries[9].energy, -6.0);
  // second-lowest level is strictly higher
  auto sorted = sorted_by_energy(s);
  EXPECT_GT(sorted.entries[1].energy, -6.0);
  const Spectrum si = enumerate(qubo_to_ising(didactic_qubo()));
  EXPECT_EQ(ground_states(si), std::vector<std::uint64_t>{9});
}

TEST(Enumerate, MatchesDirectEvaluation) {
  const QuboModel q = testing::random_qubo(10, 77);
  const Spectrum s = enumerate(q);
  for (const auto& e : s.entries) ASSERT_EQ(e.energy, q.energy(index_to_bits(e.index, 10)));
}

TEST(Enumerate, ThreadCountInvariant) {
  const QuboModel q = testing::random_qubo(14, 3);
  set_num_threads(1);
  const auto a = energy_table(q);
  set_num_threads(3);
  const auto b = energy_table(q);
  set_num_threads(0);
  EXPECT_EQ(a, b);
}

TEST(Enumerate, Degeneracy) {
  QuboModel q(2);  // energy = x0 + x1 - 2 x0 x1: minimum 0 at 00 and 11
  q.add_linear(0, 1);
  q.add_linear(1, 1);
  q.add_product(0, 1, -2);
  EXPECT_EQ(ground_states(enumerate(q)), (std::vector<std::uint64_t>{0, 3}));
  EXPECT_EQ(ground_states(enumerate(QuboModel(2))).size(), 4u);
}

TEST(Classify, FeasibleSetsMatchPublishedLists) {
  EXPECT_EQ(feasible_indices(classified(1)), (std::set<std::uint64_t>{81, 98, 148}));
  EXPECT_EQ(feasible_indices(classified(2)), (std::set<std::uint64_t>{321, 386, 580, 648, 1104}));
  EXPECT_EQ(feasible_indices(classified(3)),
            (std::set<std::uint64_t>{4609, 5122, 6148, 8712, 9232, 10272, 16960, 17536}));
}

TEST(Classify, OptimalEntries) {
  const std::uint64_t expected[] = {98, 648, 10272};
  for (int k = 1; k <= 3; ++k) {
    const Spectrum s = classified(k);
    std::vector<std::uint64_t> opt;
    for (const auto& e : s.entries)
      if (e.cls == SolutionClass::optimal) opt.push_back(e.index);
    EXPECT_EQ(opt, std::vector<std::uint64_t>{expected[k - 1]}) << "instance " << k;
  }
}

TEST(Classify, PaperWeightGroundStates) {
  const std::uint64_t expected[] = {98, 580, 5122};
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(ground_states(classified(k)), std::vector<std::uint64_t>{expected[k - 1]});
}

TEST(Separation, PaperWeights) {
  for (int k = 1; k <= 3; ++k) {
    const Spectrum s = classified(k);
    const SeparationReport r = separation_report(s);
    EXPECT_TRUE(r.separated()) << "instance " << k;
    // brute-force restatement
    double max_f = -1e300, min_i = 1e300;
    for (const auto& e : s.entries) {
      if (is_feasible(e.cls)) max_f = std::max(max_f, e.energy);
      else min_i = std::min(min_i, e.energy);
    }
    EXPECT_EQ(r.max_feasible_energy, max_f);
    EXPECT_EQ(r.min_infeasible_energy, min_i);
    EXPECT_EQ(r.gap, min_i - max_f);
  }
}

TEST(Separation, StreamingAgreesWithStored) {
  for (int k = 1; k <= 3; ++k) {
    const auto inst = preprocess(reference_catalog(k), reference_spec());
    const auto dq = build_qubo(inst, reference_weights(k));
    const SeparationReport a = separation_report(classify(enumerate(dq.model), inst));
    const SeparationReport b = separation_report(dq.model, inst);
    EXPECT_EQ(a.max_feasible_energy, b.max_feasible_energy);
    EXPECT_EQ(a.min_infeasible_energy, b.min_infeasible_energy);
  }
}

TEST(Separation, ZeroResonanceWeightsFail) {
  // Without M5/M6 some resonance-violating pair undercuts a feasible state.
  const auto inst = preprocess(reference_catalog(1), reference_spec());
  const auto dq = build_qubo(inst, PenaltyWeights{});
  EXPECT_FALSE(separation_report(dq.model, inst).separated());
}

TEST(Separation, NeedsBothClasses) {
  const Spectrum s = classify_unconstrained(enumerate(didactic_qubo()));
  EXPECT_THROW(separation_report(s), std::invalid_argument);
}

TEST(SpectrumCsv, Format) {
  const Spectrum s = classified(1);
  std::ostringstream out;
  write_spectrum_csv(out, s);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "index,bitstring,energy,class");
  int rows = 0;
  bool saw98 = false;
  while (std::getline(in, line)) {
    ++rows;
    if (line.rfind("98,01100010,", 0) == 0) {
      saw98 = true;
      EXPECT_NE(line.find(",optimal"), std::string::npos);
    }
  }
  EXPECT_EQ(rows, 256);
  EXPECT_TRUE(saw98);
}

}  // namespace
}  // namespace qwb
