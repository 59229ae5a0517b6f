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

#include "qwb/pbool.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace qwb {

std::vector<std::uint8_t> index_to_bits(std::uint64_t index, int n) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) bits[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(bit_of(index, n, v));
  return bits;
}

std::uint64_t bits_to_index(std::span<const std::uint8_t> bits) {
  std::uint64_t index = 0;
  for (std::uint8_t b : bits) index = (index << 1) | (b & 1U);
  return index;
}

std::string bitstring(std::uint64_t index, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int v = 0; v < n; ++v)
    if (bit_of(index, n, v)) s[static_cast<std::size_t>(v)] = '1';
  return s;
}

namespace {

void check_bits(std::span<const std::uint8_t> bits, int n) {
  if (static_cast<int>(bits.size()) != n)
    throw std::invalid_argument(fmt::format("assignment has {} entries, model has {}", bits.size(), n));
  for (std::uint8_t b : bits)
    if (b > 1) throw std::invalid_argument("binary assignment contains a value other than 0/1");
}

void check_var(int v, int n) {
  if (v < 0 || v >= n)
    throw std::out_of_range(fmt::format("variable index {} outside [0, {})", v, n));
}

// Merges repeated variables of a linear expression.
std::map<int, double> collect(const LinearExpr& expr) {
  std::map<int, double> out;
  for (auto [v, a] : expr.coeffs) out[v] += a;
  return out;
}

}  // namespace

bool LinearExpr::is_zero() const {
  if (constant != 0.0) return false;
  for (auto [v, a] : collect(*this))
    if (a != 0.0) return false;
  return true;
}

// ---- PseudoBooleanPoly ------------------------------------------------------

PseudoBooleanPoly::PseudoBooleanPoly(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
}

void PseudoBooleanPoly::reserve_vars(int num_vars) { num_vars_ = std::max(num_vars_, num_vars); }

void PseudoBooleanPoly::add_term(std::vector<int> vars, double coeff) {
  if (!std::isfinite(coeff)) throw std::invalid_argument("non-finite coefficient");
  for (int v : vars) check_var(v, num_vars_);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (coeff == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(vars), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0.0) terms_.erase(it);
  }
}

double PseudoBooleanPoly::coefficient(const Term& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? 0.0 : it->second;
}

int PseudoBooleanPoly::degree() const {
  int d = 0;
  for (const auto& [t, a] : terms_) d = std::max(d, static_cast<int>(t.size()));
  return d;
}

double PseudoBooleanPoly::eval(std::span<const std::uint8_t> bits) const {
  check_bits(bits, num_vars_);
  double acc = 0.0;
  for (const auto& [t, a] : terms_) {
    bool on = true;
    for (int v : t) on = on && bits[static_cast<std::size_t>(v)];
    if (on) acc += a;
  }
  return acc;
}

PseudoBooleanPoly PseudoBooleanPoly::simplified() const {
  PseudoBooleanPoly out(num_vars_);
  for (const auto& [t, a] : terms_)
    if (std::abs(a) >= kPruneThreshold) out.terms_.emplace(t, a);
  return out;
}

PseudoBooleanPoly& PseudoBooleanPoly::operator+=(const PseudoBooleanPoly& other) {
  reserve_vars(other.num_vars_);
  for (const auto& [t, a] : other.terms_) add_term(t, a);
  return *this;
}

PseudoBooleanPoly& PseudoBooleanPoly::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, a] : terms_) a *= s;
  return *this;
}

PseudoBooleanPoly PseudoBooleanPoly::linear(const LinearExpr& expr, int num_vars) {
  PseudoBooleanPoly p(num_vars);
  for (auto [v, a] : collect(expr)) p.add_term({v}, a);
  p.add_constant(expr.constant);
  return p;
}

PseudoBooleanPoly PseudoBooleanPoly::square(const LinearExpr& expr, int num_vars) {
  const std::map<int, double> a = collect(expr);
  const double c = expr.constant;
  PseudoBooleanPoly p(num_vars);
  for (auto i = a.begin(); i != a.end(); ++i) {
    p.add_term({i->first}, i->second * i->second + 2.0 * c * i->second);
    for (auto j = std::next(i); j != a.end(); ++j)
      p.add_term({i->first, j->first}, 2.0 * i->second * j->second);
  }
  p.add_constant(c * c);
  return p;
}

// ---- QuboModel ----------------------------------------------------------------

QuboModel::QuboModel(int n)
    : n_(n), q_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0),
      c_(static_cast<std::size_t>(n), 0.0) {
  if (n < 0) throw std::invalid_argument("negative variable count");
}

void QuboModel::add_linear(int i, double v) {
  check_var(i, n_);
  c_[static_cast<std::size_t>(i)] += v;
}

void QuboModel::add_product(int i, int j, double a) {
  check_var(i, n_);
  check_var(j, n_);
  if (i == j) {
    add_linear(i, a);
    return;
  }
  q_[static_cast<std::size_t>(i) * n_ + j] += a / 2;
  q_[static_cast<std::size_t>(j) * n_ + i] += a / 2;
}

template <class BitFn>
double QuboModel::energy_impl(BitFn&& bit) const {
  double acc = 0.0;
  for (int i = 0; i < n_; ++i) {
    if (!bit(i)) continue;
    acc += c_[static_cast<std::size_t>(i)];
    const double* row = q_.data() + static_cast<std::size_t>(i) * n_;
    for (int j = 0; j < n_; ++j)
      if (bit(j)) acc += row[j];
  }
  return acc + offset_;
}

double QuboModel::energy(std::span<const std::uint8_t> bits) const {
  check_bits(bits, n_);
  return energy_impl([&](int v) { return bits[static_cast<std::size_t>(v)] != 0; });
}

double QuboModel::energy_at(std::uint64_t index) const {
  return energy_impl([&](int v) { return bit_of(index, n_, v) != 0; });
}

// ---- IsingModel ---------------------------------------------------------------

IsingModel::IsingModel(int n) : n_(n), h_(static_cast<std::size_t>(n), 0.0) {
  if (n < 0) throw std::invalid_argument("negative spin count");
}

double IsingModel::coupling(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = r_.find({i, j});
  return it == r_.end() ? 0.0 : it->second;
}

void IsingModel::add_field(int i, double v) {
  check_var(i, n_);
  h_[static_cast<std::size_t>(i)] += v;
}

void IsingModel::add_coupling(int i, int j, double v) {
  check_var(i, n_);
  check_var(j, n_);
  if (i == j) {
    // z_i^2 = 1
    offset_ += v;
    return;
  }
  if (i > j) std::swap(i, j);
  r_[{i, j}] += v;
}

template <class SpinFn>
double IsingModel::energy_impl(SpinFn&& spin) const {
  double acc = 0.0;
  for (int i = 0; i < n_; ++i) acc += h_[static_cast<std::size_t>(i)] * spin(i);
  for (const auto& [ij, r] : r_) acc += r * spin(ij.first) * spin(ij.second);
  return acc + offset_;
}

double IsingModel::energy(std::span<const int> spins) const {
  if (static_cast<int>(spins.size()) != n_)
    throw std::invalid_argument(fmt::format("spin vector has {} entries, model has {}", spins.size(), n_));
  for (int s : spins)
    if (s != 1 && s != -1) throw std::invalid_argument("spin value other than -1/+1");
  return energy_impl([&](int v) { return static_cast<double>(spins[static_cast<std::size_t>(v)]); });
}

double IsingModel::energy_at(std::uint64_t index) const {
  return energy_impl([&](int v) { return bit_of(index, n_, v) ? -1.0 : 1.0; });
}

// ---- VarRegistry ----------------------------------------------------------------

int VarRegistry::add(const std::string& name, VarKind kind) {
  if (index_.count(name)) throw std::invalid_argument("duplicate variable name: " + name);
  const int idx = size();
  names_.push_back(name);
  kinds_.push_back(kind);
  index_.emplace(name, idx);
  return idx;
}

int VarRegistry::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::out_of_range("unknown variable: " + name);
  return it->second;
}

// ---- transforms ------------------------------------------------------------------

IsingModel qubo_to_ising(const QuboModel& q) {
  // x_i = (1 - z_i)/2
  const int n = q.n();
  IsingModel m(n);
  double offset = q.offset();
  for (int i = 0; i < n; ++i) {
    const double c = q.c(i);
    offset += c / 2;
    m.add_field(i, -c / 2);
    for (int j = i + 1; j < n; ++j) {
      const double a = q.q(i, j) + q.q(j, i);  // coefficient of x_i x_j
      if (a == 0.0) continue;
      offset += a / 4;
      m.add_field(i, -a / 4);
      m.add_field(j, -a / 4);
      m.add_coupling(i, j, a / 4);
    }
  }
  m.add_offset(offset);
  return m;
}

QuboModel ising_to_qubo(const IsingModel& m) {
  // z_i = 1 - 2 x_i
  const int n = m.n();
  QuboModel q(n);
  double offset = m.offset();
  for (int i = 0; i < n; ++i) {
    offset += m.h(i);
    q.add_linear(i, -2 * m.h(i));
  }
  for (const auto& [ij, r] : m.couplings()) {
    offset += r;
    q.add_linear(ij.first, -2 * r);
    q.add_linear(ij.second, -2 * r);
    q.add_product(ij.first, ij.second, 4 * r);
  }
  q.add_offset(offset);
  return q;
}

QuboModel to_qubo(const PseudoBooleanPoly& p) {
  if (p.degree() > 2)
    throw std::invalid_argument(fmt::format("to_qubo: polynomial has degree {}, quadratize first", p.degree()));
  QuboModel q(p.num_vars());
  for (const auto& [t, a] : p.terms()) {
    switch (t.size()) {
      case 0: q.add_offset(a); break;
      case 1: q.add_linear(t[0], a); break;
      default: q.add_product(t[0], t[1], a); break;
    }
  }
  return q;
}

// ---- constraint encodings ---------------------------------------------------------

PseudoBooleanPoly add_equality_penalty(const PseudoBooleanPoly& p, const LinearExpr& expr,
                                       double weight) {
  if (!(weight >= 0.0)) throw std::invalid_argument("penalty weight must be non-negative");
  for (auto [v, a] : expr.coeffs) check_var(v, p.num_vars());
  PseudoBooleanPoly out = p;
  if (weight == 0.0 || expr.is_zero()) return out;
  PseudoBooleanPoly sq = PseudoBooleanPoly::square(expr, p.num_vars());
  sq *= weight;
  out += sq;
  return out.simplified();
}

namespace {
bool is_integral(double v) { return std::isfinite(v) && v == std::round(v); }
}  // namespace

int slack_bit_count(const LinearInequality& ineq) {
  if (!is_integral(ineq.bound)) throw std::invalid_argument("slack encoding needs an integer bound");
  double min_lhs = 0.0;
  for (auto [v, a] : collect(LinearExpr{ineq.coeffs, 0.0})) {
    if (!is_integral(a)) throw std::invalid_argument("slack encoding needs integer coefficients");
    min_lhs += std::min(0.0, a);
  }
  const double range = ineq.bound - min_lhs;
  if (range < 0)
    throw std::invalid_argument(
        fmt::format("inequality can never hold: bound {} is below the minimum left-hand side {}", ineq.bound, min_lhs));
  int k = 0;
  while (std::ldexp(1.0, k) < range + 1) ++k;
  return k;
}

SlackEncoding encode_slack_inequality(const PseudoBooleanPoly& p, const LinearInequality& ineq,
                                      double weight) {
  if (!(weight >= 0.0)) throw std::invalid_argument("penalty weight must be non-negative");
  for (auto [v, a] : ineq.coeffs) check_var(v, p.num_vars());
  const int k = slack_bit_count(ineq);
  SlackEncoding enc{p, {}};
  enc.poly.reserve_vars(p.num_vars() + k);
  LinearExpr expr{ineq.coeffs, -ineq.bound};
  for (int s = 0; s < k; ++s) {
    const int var = p.num_vars() + s;
    enc.slack_vars.push_back(var);
    expr.coeffs.emplace_back(var, std::ldexp(1.0, s));
  }
  enc.poly = add_equality_penalty(enc.poly, expr, weight);
  return enc;
}

PseudoBooleanPoly add_unbalanced_penalty(const PseudoBooleanPoly& p, const LinearExpr& g,
                                         double lambda1, double lambda2) {
  if (!(lambda1 >= 0.0) || !(lambda2 >= 0.0))
    throw std::invalid_argument("unbalanced penalty weights must be non-negative");
  for (auto [v, a] : g.coeffs) check_var(v, p.num_vars());
  PseudoBooleanPoly out = p;
  if (g.is_zero()) return out;
  PseudoBooleanPoly lin = PseudoBooleanPoly::linear(g, p.num_vars());
  lin *= lambda1;
  PseudoBooleanPoly sq = PseudoBooleanPoly::square(g, p.num_vars());
  sq *= lambda2;
  out += lin;
  out += sq;
  return out.simplified();
}

PseudoBooleanPoly rosenberg_penalty(int x, int y, int w, double weight, int num_vars) {
  PseudoBooleanPoly p(num_vars);
  p.add_term({w}, 3 * weight);
  p.add_term({x, y}, weight);
  p.add_term({x, w}, -2 * weight);
  p.add_term({y, w}, -2 * weight);
  return p;
}

Quadratization rosenberg_quadratize(const PseudoBooleanPoly& p, double weight) {
  if (!(weight >= 0.0)) throw std::invalid_argument("quadratization weight must be non-negative");
  const int deg = p.degree();
  if (deg > 3)
    throw std::invalid_argument(
        fmt::format("rosenberg_quadratize supports degree <= 3, polynomial has degree {}", deg));
  Quadratization out{PseudoBooleanPoly(p.num_vars()), {}};
  std::map<std::pair<int, int>, int> aux_of_pair;
  for (const auto& [t, a] : p.terms()) {
    if (t.size() < 3) {
      out.poly.add_term(t, a);
      continue;
    }
    const std::pair<int, int> pair{t[0], t[1]};
    auto it = aux_of_pair.find(pair);
    if (it == aux_of_pair.end()) {
      const int w = out.poly.num_vars();
      out.poly.reserve_vars(w + 1);
      out.aux.push_back({w, pair.first, pair.second});
      it = aux_of_pair.emplace(pair, w).first;
      out.poly += rosenberg_penalty(pair.first, pair.second, w, weight, w + 1);
    }
    out.poly.add_term({it->second, t[2]}, a);
  }
  out.poly = out.poly.simplified();
  return out;
}

}  // namespace qwb
