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

// Pseudo-Boolean objectives and their QUBO / Ising normal forms.
//
// Conventions shared by the whole library:
//   * x = (1 - z) / 2, so x = 0 <-> z = +1 <-> |0>, and x = 1 <-> z = -1 <-> |1>.
//   * A basis index stores variable 0 in its most significant bit.
//   * QuboModel keeps a symmetric q with zero diagonal; a product a*x_i*x_j
//     contributes a/2 to both q(i,j) and q(j,i).

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qwb {

/// Terms with |coefficient| below this are dropped by simplify().
inline constexpr double kPruneThreshold = 1e-12;

/// Value of variable `var` in basis state `index` of an n-variable register.
inline int bit_of(std::uint64_t index, int n, int var) {
  return static_cast<int>((index >> (n - 1 - var)) & 1U);
}

std::vector<std::uint8_t> index_to_bits(std::uint64_t index, int n);
std::uint64_t bits_to_index(std::span<const std::uint8_t> bits);
/// MSB-first rendering, e.g. 98 with n = 8 -> "01100010".
std::string bitstring(std::uint64_t index, int n);

/// Sum of a_i x_i plus a constant.
struct LinearExpr {
  std::vector<std::pair<int, double>> coeffs;
  double constant = 0.0;

  bool is_zero() const;
};

/// sum a_i x_i <= bound, with integer-valued a_i and bound.
struct LinearInequality {
  std::vector<std::pair<int, double>> coeffs;
  double bound = 0.0;
};

class PseudoBooleanPoly {
 public:
  /// Sorted, duplicate-free variable indices; empty means the constant term.
  using Term = std::vector<int>;

  explicit PseudoBooleanPoly(int num_vars = 0);

  int num_vars() const { return num_vars_; }
  /// Grows the variable count; never shrinks.
  void reserve_vars(int num_vars);

  /// Adds coeff * prod(x_v for v in vars). Repeated indices collapse (x^2 = x).
  void add_term(std::vector<int> vars, double coeff);
  void add_constant(double c) { add_term({}, c); }

  const std::map<Term, double>& terms() const { return terms_; }
  double coefficient(const Term& t) const;
  int degree() const;

  double eval(std::span<const std::uint8_t> bits) const;

  /// Copy without terms whose |coefficient| < kPruneThreshold.
  PseudoBooleanPoly simplified() const;

  PseudoBooleanPoly& operator+=(const PseudoBooleanPoly& other);
  PseudoBooleanPoly& operator*=(double s);
  friend bool operator==(const PseudoBooleanPoly&, const PseudoBooleanPoly&) = default;

  /// (expr)^2 expanded with x_i^2 = x_i.
  static PseudoBooleanPoly square(const LinearExpr& expr, int num_vars);
  static PseudoBooleanPoly linear(const LinearExpr& expr, int num_vars);

 private:
  int num_vars_;
  std::map<Term, double> terms_;
};

class QuboModel {
 public:
  explicit QuboModel(int n = 0);

  int n() const { return n_; }
  double q(int i, int j) const { return q_[static_cast<std::size_t>(i) * n_ + j]; }
  double c(int i) const { return c_[static_cast<std::size_t>(i)]; }
  double offset() const { return offset_; }
  const std::vector<double>& linear() const { return c_; }

  void add_linear(int i, double v);
  /// Adds a * x_i * x_j; i == j folds into the linear part.
  void add_product(int i, int j, double a);
  void add_offset(double v) { offset_ += v; }

  /// x^T q x + c^T x + offset.
  double energy(std::span<const std::uint8_t> bits) const;
  double energy_at(std::uint64_t index) const;

 private:
  template <class BitFn>
  double energy_impl(BitFn&& bit) const;

  int n_;
  std::vector<double> q_;
  std::vector<double> c_;
  double offset_ = 0.0;
};

class IsingModel {
 public:
  using Couplings = std::map<std::pair<int, int>, double>;

  explicit IsingModel(int n = 0);

  int n() const { return n_; }
  double h(int i) const { return h_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& fields() const { return h_; }
  /// Keys satisfy first < second.
  const Couplings& couplings() const { return r_; }
  double coupling(int i, int j) const;
  double offset() const { return offset_; }

  void add_field(int i, double v);
  void add_coupling(int i, int j, double v);
  void add_offset(double v) { offset_ += v; }

  /// z^T R z + h^T z + offset with R upper triangular, z in {-1, +1}^n.
  double energy(std::span<const int> spins) const;
  double energy_at(std::uint64_t index) const;

 private:
  template <class SpinFn>
  double energy_impl(SpinFn&& spin) const;

  int n_;
  std::vector<double> h_;
  Couplings r_;
  double offset_ = 0.0;
};

enum class VarKind { decision, aux_product, slack };

class VarRegistry {
 public:
  int add(const std::string& name, VarKind kind);
  int size() const { return static_cast<int>(names_.size()); }
  int index_of(const std::string& name) const;
  const std::string& name_of(int index) const { return names_.at(static_cast<std::size_t>(index)); }
  VarKind kind_of(int index) const { return kinds_.at(static_cast<std::size_t>(index)); }
  bool contains(const std::string& name) const { return index_.count(name) != 0; }

 private:
  std::vector<std::string> names_;
  std::vector<VarKind> kinds_;
  std::unordered_map<std::string, int> index_;
};

IsingModel qubo_to_ising(const QuboModel& q);
QuboModel ising_to_qubo(const IsingModel& m);

/// Requires degree <= 2.
QuboModel to_qubo(const PseudoBooleanPoly& p);

/// p + weight * (expr)^2.
PseudoBooleanPoly add_equality_penalty(const PseudoBooleanPoly& p, const LinearExpr& expr,
                                       double weight);

struct SlackEncoding {
  PseudoBooleanPoly poly;
  std::vector<int> slack_vars;  // bit k has weight 2^k
};

/// Number of binary slack bits for a^T x <= b: ceil(log2(b - min_x a^T x + 1)).
int slack_bit_count(const LinearInequality& ineq);

/// p + weight * (a^T x + sum_k 2^k s_k - b)^2 with fresh slack bits appended.
SlackEncoding encode_slack_inequality(const PseudoBooleanPoly& p, const LinearInequality& ineq,
                                      double weight);

/// p + lambda1 * g + lambda2 * g^2, where g > 0 marks a violation.
PseudoBooleanPoly add_unbalanced_penalty(const PseudoBooleanPoly& p, const LinearExpr& g,
                                         double lambda1, double lambda2);

/// weight * (3w + xy - 2xw - 2yw); zero iff w = x*y, otherwise >= weight.
PseudoBooleanPoly rosenberg_penalty(int x, int y, int w, double weight, int num_vars);

struct AuxVar {
  int index;
  int x;
  int y;
};

struct Quadratization {
  PseudoBooleanPoly poly;
  std::vector<AuxVar> aux;
};

/// Replaces the leading pair of every cubic term by an auxiliary product
/// variable (shared between terms with the same pair). Rejects degree > 3.
Quadratization rosenberg_quadratize(const PseudoBooleanPoly& p, double weight);

}  // namespace qwb
