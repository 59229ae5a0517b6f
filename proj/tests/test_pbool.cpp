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

#include <cmath>
#include <limits>
#include <random>

#include "qwb/instance_io.hpp"
#include "qwb/pbool.hpp"
#include "test_util.hpp"

namespace qwb {
namespace {

std::vector<std::uint8_t> bits(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

// Direct sum over the stored matrix, independent of energy_at().
double dense_energy(const QuboModel& q, std::uint64_t index) {
  const int n = q.n();
  double e = q.offset();
  for (int i = 0; i < n; ++i) {
    const int xi = bit_of(index, n, i);
    e += q.c(i) * xi;
    for (int j = 0; j < n; ++j) e += q.q(i, j) * xi * bit_of(index, n, j);
  }
  return e;
}

// Spin energy from first principles: z_i = 1 - 2 x_i.
double spin_energy(const IsingModel& m, std::uint64_t index) {
  const int n = m.n();
  double e = m.offset();
  for (int i = 0; i < n; ++i) e += m.h(i) * (1 - 2 * bit_of(index, n, i));
  for (const auto& [ij, r] : m.couplings())
    e += r * (1 - 2 * bit_of(index, n, ij.first)) * (1 - 2 * bit_of(index, n, ij.second));
  return e;
}

PseudoBooleanPoly random_quadratic_poly(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-4, 4);
  PseudoBooleanPoly p(n);
  p.add_constant(u(rng));
  for (int i = 0; i < n; ++i) {
    p.add_term({i}, u(rng));
    for (int j = i + 1; j < n; ++j)
      if (rng() % 2) p.add_term({i, j}, u(rng));
  }
  return p;
}

TEST(Bits, MostSignificantFirst) {
  EXPECT_EQ(bitstring(98, 8), "01100010");
  EXPECT_EQ(bit_of(98, 8, 1), 1);
  EXPECT_EQ(bit_of(98, 8, 0), 0);
  EXPECT_EQ(bits_to_index(index_to_bits(5122, 15)), 5122u);
}

TEST(Didactic, QuboCoefficients) {
  const QuboModel q = didactic_qubo();
  EXPECT_EQ(q.c(0), -3.0);
  EXPECT_EQ(q.c(1), 0.0);
  EXPECT_EQ(q.c(2), 0.0);
  EXPECT_EQ(q.c(3), -3.0);
  for (auto [i, j] : {std::pair{0, 1}, {1, 2}, {2, 3}}) {
    EXPECT_EQ(q.q(i, j), 1.0);
    EXPECT_EQ(q.q(j, i), 1.0);
  }
  EXPECT_EQ(q.q(0, 2), 0.0);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(q.q(i, i), 0.0);
  EXPECT_EQ(q.energy(bits({1, 0, 0, 1})), -6.0);
  EXPECT_EQ(q.energy(bits({0, 0, 0, 0})), 0.0);
}

TEST(Didactic, IsingForm) {
  const IsingModel m = qubo_to_ising(didactic_qubo());
  EXPECT_EQ(m.offset(), -1.5);
  EXPECT_EQ(m.fields(), (std::vector<double>{1, -1, -1, 1}));
  ASSERT_EQ(m.couplings().size(), 3u);
  EXPECT_EQ(m.coupling(0, 1), 0.5);
  EXPECT_EQ(m.coupling(1, 2), 0.5);
  EXPECT_EQ(m.coupling(2, 3), 0.5);
  const std::vector<int> z{-1, 1, 1, -1};
  EXPECT_EQ(m.energy(z), -6.0);
}

TEST(Didactic, IsingBackToQubo) {
  IsingModel m(4);
  m.add_offset(-1.5);
  m.add_field(0, 1);
  m.add_field(1, -1);
  m.add_field(2, -1);
  m.add_field(3, 1);
  m.add_coupling(0, 1, 0.5);
  m.add_coupling(1, 2, 0.5);
  m.add_coupling(2, 3, 0.5);
  const QuboModel q = ising_to_qubo(m);
  const QuboModel ref = didactic_qubo();
  EXPECT_NEAR(q.offset(), 0.0, 1e-15);
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(q.c(i), ref.c(i), 1e-15);
    for (int j = 0; j < 4; ++j) EXPECT_NEAR(q.q(i, j), ref.q(i, j), 1e-15);
  }
}

TEST(Transform, ZeroModels) {
  const IsingModel m = qubo_to_ising(QuboModel(3));
  EXPECT_EQ(m.offset(), 0.0);
  EXPECT_TRUE(m.couplings().empty());
  for (double h : m.fields()) EXPECT_EQ(h, 0.0);
  const QuboModel q = ising_to_qubo(IsingModel(3));
  for (std::uint64_t b = 0; b < 8; ++b) EXPECT_EQ(q.energy_at(b), 0.0);
}

TEST(Transform, IntegerQuboAgreesOnAllAssignments) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    QuboModel q(3);
    for (int i = 0; i < 3; ++i) {
      q.add_linear(i, static_cast<double>(static_cast<int>(rng() % 11) - 5));
      for (int j = i + 1; j < 3; ++j) q.add_product(i, j, static_cast<double>(static_cast<int>(rng() % 11) - 5));
    }
    const IsingModel m = qubo_to_ising(q);
    for (std::uint64_t b = 0; b < 8; ++b) EXPECT_EQ(spin_energy(m, b), dense_energy(q, b));
  }
}

TEST(Transform, EquivalenceProperty) {
  for (int n = 1; n <= 12; n += 1) {
    const QuboModel q = testing::random_qubo(n, 100 + n);
    const IsingModel m = qubo_to_ising(q);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      const double ref = dense_energy(q, b);
      ASSERT_NEAR(q.energy_at(b), ref, 1e-9 * (1 + std::abs(ref)));
      ASSERT_NEAR(spin_energy(m, b), ref, 1e-9 * (1 + std::abs(ref)));
      ASSERT_NEAR(m.energy_at(b), ref, 1e-9 * (1 + std::abs(ref))) << "index " << b;
    }
  }
}

TEST(Transform, RoundTripRandomIsing) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    IsingModel m(5);
    m.add_offset(u(rng));
    for (int i = 0; i < 5; ++i) {
      m.add_field(i, u(rng));
      for (int j = i + 1; j < 5; ++j) m.add_coupling(i, j, u(rng));
    }
    const IsingModel back = qubo_to_ising(ising_to_qubo(m));
    EXPECT_NEAR(back.offset(), m.offset(), 1e-12);
    for (int i = 0; i < 5; ++i) {
      EXPECT_NEAR(back.h(i), m.h(i), 1e-12);
      for (int j = i + 1; j < 5; ++j) EXPECT_NEAR(back.coupling(i, j), m.coupling(i, j), 1e-12);
    }
  }
}

TEST(Ising, BadInput) {
  IsingModel m(2);
  EXPECT_THROW(m.energy(std::vector<int>{1}), std::invalid_argument);
  EXPECT_THROW(m.energy(std::vector<int>{1, 0}), std::invalid_argument);
  QuboModel q(2);
  EXPECT_THROW(q.energy(bits({1, 2})), std::invalid_argument);
  EXPECT_THROW(q.energy(bits({1})), std::invalid_argument);
}

TEST(Poly, TermsAreReduced) {
  PseudoBooleanPoly p(3);
  p.add_term({2, 0, 2}, 1.5);
  EXPECT_EQ(p.coefficient({0, 2}), 1.5);
  p.add_term({0, 2}, -1.5);
  EXPECT_TRUE(p.terms().empty());
  EXPECT_THROW(p.add_term({3}, 1.0), std::out_of_range);
}

TEST(Poly, SimplifyIsIdempotent) {
  PseudoBooleanPoly p(3);
  p.add_term({0}, 1e-13);
  p.add_term({1}, 2.0);
  p.add_term({0, 1, 2}, -1e-14);
  const auto s = p.simplified();
  EXPECT_EQ(s.terms().size(), 1u);
  EXPECT_EQ(s.simplified(), s);
}

TEST(Poly, ToQuboMatchesEvaluation) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const PseudoBooleanPoly p = random_quadratic_poly(n, rng);
    const QuboModel q = to_qubo(p);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      const double ref = p.eval(index_to_bits(b, n));
      ASSERT_NEAR(q.energy_at(b), ref, 1e-9 * (1 + std::abs(ref)));
    }
  }
}

TEST(Poly, ToQuboConstantAndCubic) {
  PseudoBooleanPoly c(2);
  c.add_constant(4.0);
  const QuboModel q = to_qubo(c);
  EXPECT_EQ(q.offset(), 4.0);
  EXPECT_EQ(q.c(0), 0.0);
  EXPECT_EQ(q.q(0, 1), 0.0);
  PseudoBooleanPoly cubic(3);
  cubic.add_term({0, 1, 2}, 1.0);
  EXPECT_THROW(to_qubo(cubic), std::invalid_argument);
}

TEST(Penalty, OneHotExpansion) {
  LinearExpr e{{{0, 1.0}, {1, 1.0}}, -1.0};
  const auto p = add_equality_penalty(PseudoBooleanPoly(2), e, 5.0);
  EXPECT_EQ(p.coefficient({}), 5.0);
  EXPECT_EQ(p.coefficient({0}), -5.0);
  EXPECT_EQ(p.coefficient({1}), -5.0);
  EXPECT_EQ(p.coefficient({0, 1}), 10.0);
}

TEST(Penalty, TrivialCases) {
  PseudoBooleanPoly base(2);
  base.add_term({0, 1}, 2.0);
  EXPECT_EQ(add_equality_penalty(base, LinearExpr{}, 3.0), base);
  EXPECT_EQ(add_equality_penalty(base, LinearExpr{{{0, 1.0}}, -1.0}, 0.0), base);
  EXPECT_THROW(add_equality_penalty(base, LinearExpr{{{0, 1.0}}, -1.0}, -1.0), std::invalid_argument);
}

TEST(Penalty, EqualityZeroExactlyOnSatisfying) {
  // x0 + 2 x1 - x2 = 1 over four variables
  const LinearExpr e{{{0, 1.0}, {1, 2.0}, {2, -1.0}}, -1.0};
  const auto p = add_equality_penalty(PseudoBooleanPoly(4), e, 2.0);
  for (std::uint64_t b = 0; b < 16; ++b) {
    const auto x = index_to_bits(b, 4);
    const double lhs = x[0] + 2.0 * x[1] - x[2];
    const double v = p.eval(x);
    EXPECT_GE(v, 0.0);
    EXPECT_EQ(v == 0.0, lhs == 1.0) << b;
  }
}

// Minimum of the penalty over all slack settings for one decision assignment.
double min_over_slack(const SlackEncoding& enc, std::uint64_t decision, int nd) {
  const int ns = static_cast<int>(enc.slack_vars.size());
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << ns); ++s) {
    std::vector<std::uint8_t> x = index_to_bits(decision, nd);
    x.resize(static_cast<std::size_t>(nd + ns));
    for (int k = 0; k < ns; ++k) x[static_cast<std::size_t>(enc.slack_vars[k])] = (s >> k) & 1U;
    best = std::min(best, enc.poly.eval(x));
  }
  return best;
}

TEST(Slack, BitCounts) {
  EXPECT_EQ(slack_bit_count({{{0, 1}, {1, 1}, {2, 1}}, 2}), 2);
  EXPECT_EQ(slack_bit_count({{{0, 1}}, 1}), 1);
  EXPECT_EQ(slack_bit_count({{{0, -1}}, 0}), 1);
}

TEST(Slack, ZeroPenaltyExactlyWhenSatisfied) {
  const LinearInequality ineq{{{0, 1}, {1, 1}, {2, 1}}, 2};
  const SlackEncoding enc = encode_slack_inequality(PseudoBooleanPoly(3), ineq, 1.0);
  ASSERT_EQ(enc.slack_vars.size(), 2u);
  int satisfied = 0;
  for (std::uint64_t b = 0; b < 8; ++b) {
    const auto x = index_to_bits(b, 3);
    const bool ok = x[0] + x[1] + x[2] <= 2;
    const double m = min_over_slack(enc, b, 3);
    EXPECT_GE(m, 0.0);
    EXPECT_EQ(m == 0.0, ok) << b;
    satisfied += ok;
  }
  EXPECT_EQ(satisfied, 7);
}

TEST(Slack, AlwaysSatisfied) {
  const SlackEncoding enc = encode_slack_inequality(PseudoBooleanPoly(1), {{{0, 1}}, 1}, 3.0);
  EXPECT_EQ(enc.slack_vars.size(), 1u);
  EXPECT_EQ(min_over_slack(enc, 0, 1), 0.0);
  EXPECT_EQ(min_over_slack(enc, 1, 1), 0.0);
}

TEST(Slack, RejectsBadInput) {
  EXPECT_THROW(encode_slack_inequality(PseudoBooleanPoly(1), {{{0, 0.5}}, 1}, 1.0), std::invalid_argument);
  EXPECT_THROW(encode_slack_inequality(PseudoBooleanPoly(1), {{{0, 1}}, -1}, 1.0), std::invalid_argument);
}

TEST(Unbalanced, Expansion) {
  const LinearExpr g{{{0, -1.0}}, 1.0};
  const auto p = add_unbalanced_penalty(PseudoBooleanPoly(1), g, 1.0, 1.0);
  EXPECT_EQ(p.coefficient({}), 2.0);
  EXPECT_EQ(p.coefficient({0}), -2.0);
  PseudoBooleanPoly base(1);
  base.add_term({0}, 1.0);
  EXPECT_EQ(add_unbalanced_penalty(base, LinearExpr{}, 2.0, 3.0), base);
  EXPECT_THROW(add_unbalanced_penalty(base, g, -1.0, 1.0), std::invalid_argument);
}

TEST(Rosenberg, PenaltyTable) {
  const auto p = rosenberg_penalty(0, 1, 2, 1.0, 3);
  for (std::uint64_t b = 0; b < 8; ++b) {
    const auto x = index_to_bits(b, 3);
    const double v = p.eval(x);
    if (x[2] == (x[0] & x[1])) EXPECT_EQ(v, 0.0) << b;
    else EXPECT_GE(v, 1.0) << b;
  }
}

TEST(Rosenberg, QuadraticInputUnchanged) {
  PseudoBooleanPoly p(2);
  p.add_term({0, 1}, 1.0);
  const Quadratization q = rosenberg_quadratize(p, 5.0);
  EXPECT_TRUE(q.aux.empty());
  EXPECT_EQ(q.poly, p);
}

TEST(Rosenberg, CubicMinimumPreserved) {
  for (double sign : {1.0, -1.0}) {
    PseudoBooleanPoly p(3);
    p.add_term({0, 1, 2}, sign);
    const Quadratization q = rosenberg_quadratize(p, 5.0);
    ASSERT_EQ(q.aux.size(), 1u);
    EXPECT_LE(q.poly.degree(), 2);
    double best_q = 1e300, best_p = 1e300;
    for (std::uint64_t b = 0; b < 16; ++b) best_q = std::min(best_q, q.poly.eval(index_to_bits(b, 4)));
    for (std::uint64_t b = 0; b < 8; ++b) best_p = std::min(best_p, p.eval(index_to_bits(b, 3)));
    EXPECT_EQ(best_q, best_p);
  }
}

TEST(Rosenberg, SharedAuxAndDegreeLimit) {
  PseudoBooleanPoly p(4);
  p.add_term({0, 1, 2}, 1.0);
  p.add_term({0, 1, 3}, -2.0);
  EXPECT_EQ(rosenberg_quadratize(p, 10.0).aux.size(), 1u);
  p.add_term({0, 1, 2, 3}, 1.0);
  EXPECT_THROW(rosenberg_quadratize(p, 10.0), std::invalid_argument);
}

TEST(Registry, ContiguousUniqueNames) {
  VarRegistry r;
  EXPECT_EQ(r.add("a", VarKind::decision), 0);
  EXPECT_EQ(r.add("w", VarKind::aux_product), 1);
  EXPECT_THROW(r.add("a", VarKind::slack), std::invalid_argument);
  EXPECT_EQ(r.index_of("w"), 1);
  EXPECT_EQ(r.kind_of(1), VarKind::aux_product);
}

}  // namespace
}  // namespace qwb
