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

#include "qwb/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <stdexcept>

namespace qwb {

int LpProblem::add_var(std::string name, double lo, double hi, double obj) {
  objective.push_back(obj);
  lower.push_back(lo);
  upper.push_back(hi);
  names.push_back(std::move(name));
  for (auto& r : rows) r.resize(objective.size(), 0.0);
  return num_vars() - 1;
}

void LpProblem::add_row(std::vector<double> coeffs, double bound) {
  coeffs.resize(objective.size(), 0.0);
  rows.push_back(std::move(coeffs));
  rhs.push_back(bound);
}

void LpProblem::validate() const {
  const auto n = objective.size();
  if (lower.size() != n || upper.size() != n)
    throw std::invalid_argument("LpProblem: bound vectors do not match objective size");
  if (rhs.size() != rows.size())
    throw std::invalid_argument("LpProblem: rhs size does not match row count");
  for (std::size_t k = 0; k < n; ++k) {
    if (std::isnan(lower[k]) || std::isnan(upper[k]) || lower[k] > upper[k] ||
        lower[k] == kInf || upper[k] == -kInf)
      throw std::invalid_argument(fmt::format("LpProblem: bad bounds on variable {}", k));
    if (!std::isfinite(objective[k]))
      throw std::invalid_argument("LpProblem: non-finite objective coefficient");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n)
      throw std::invalid_argument(fmt::format("LpProblem: row {} has wrong width", i));
    if (!std::isfinite(rhs[i])) throw std::invalid_argument("LpProblem: non-finite rhs");
    for (double a : rows[i])
      if (!std::isfinite(a)) throw std::invalid_argument("LpProblem: non-finite coefficient");
  }
}

namespace {

constexpr double kPivotTol = 1e-10;
constexpr double kNegligible = 1e-14;
constexpr int kMaxPivots = 200000;

// v_k = offset + sign * y[col]  (or y[col] - y[col2] when free)
struct ColumnMap {
  enum Kind { shifted, flipped, split } kind;
  int col;
  int col2;
  double offset;
};

class Tableau {
 public:
  Tableau(int rows, int cols) : m_(rows), w_(cols + 1), t_(static_cast<std::size_t>(rows) * w_, 0.0) {}

  double& at(int i, int j) { return t_[static_cast<std::size_t>(i) * w_ + j]; }
  double& rhs(int i) { return at(i, w_ - 1); }
  int rows() const { return m_; }
  int cols() const { return w_ - 1; }

  void pivot(int r, int c, std::vector<double>& reduced, std::vector<int>& basis) {
    const double p = at(r, c);
    for (int j = 0; j < w_; ++j) at(r, j) /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (int j = 0; j < w_; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = 0.0;
    }
    const double f = reduced[c];
    if (f != 0.0) {
      for (int j = 0; j < w_; ++j) reduced[j] -= f * at(r, j);
      reduced[c] = 0.0;
    }
    basis[r] = c;
  }

 private:
  int m_;
  int w_;
  std::vector<double> t_;
};

enum class PhaseResult { optimal, unbounded };

// Maximizes cost over the columns flagged in `allowed`. `reduced` ends holding
// the reduced costs with the negated objective value in its last slot.
PhaseResult run_phase(Tableau& t, const std::vector<double>& cost, const std::vector<char>& allowed,
                      std::vector<int>& basis, std::vector<double>& reduced, int& pivots) {
  const int m = t.rows();
  const int n = t.cols();
  reduced.assign(n + 1, 0.0);
  for (int j = 0; j < n; ++j) reduced[j] = cost[j];
  for (int i = 0; i < m; ++i) {
    const double cb = cost[basis[i]];
    if (cb == 0.0) continue;
    for (int j = 0; j <= n; ++j) reduced[j] -= cb * t.at(i, j);
  }
  for (;;) {
    int enter = -1;
    for (int j = 0; j < n; ++j) {
      if (allowed[j] && reduced[j] > kOptimalityTol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return PhaseResult::optimal;

    int leave = -1;
    double best = kInf;
    double col_max = 0.0;
    double col_min = kInf;
    for (int i = 0; i < m; ++i) {
      const double a = t.at(i, enter);
      const double mag = std::abs(a);
      if (mag > kNegligible) {
        col_max = std::max(col_max, mag);
        col_min = std::min(col_min, mag);
      }
      if (a <= kPivotTol) continue;
      const double ratio = std::max(t.rhs(i), 0.0) / a;
      const double tol = 1e-12 * (1.0 + best);
      if (leave < 0 || ratio < best - tol || (ratio <= best + tol && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) {
      bool tiny_positive = false;
      for (int i = 0; i < m; ++i) {
        const double a = t.at(i, enter);
        if (a > kNegligible && a <= kPivotTol) tiny_positive = true;
      }
      if (tiny_positive)
        throw std::runtime_error(fmt::format(
            "simplex: numerically singular basis at column {} (condition estimate {:.3g})", enter,
            col_min > 0.0 && col_min < kInf ? col_max / col_min : kInf));
      return PhaseResult::unbounded;
    }
    if (++pivots > kMaxPivots) throw std::runtime_error("simplex: pivot limit exceeded");
    t.pivot(leave, enter, reduced, basis);
  }
}

}  // namespace

LpSolution solve_lp(const LpProblem& lp) {
  lp.validate();
  const int nv = lp.num_vars();

  // Map every variable onto nonnegative structural columns.
  std::vector<ColumnMap> map(nv);
  int ny = 0;
  std::vector<std::pair<int, double>> bound_rows;  // y[col] <= value
  for (int k = 0; k < nv; ++k) {
    const double lo = lp.lower[k];
    const double hi = lp.upper[k];
    if (std::isfinite(lo)) {
      map[k] = {ColumnMap::shifted, ny, -1, lo};
      if (std::isfinite(hi)) bound_rows.emplace_back(ny, hi - lo);
      ++ny;
    } else if (std::isfinite(hi)) {
      map[k] = {ColumnMap::flipped, ny++, -1, hi};
    } else {
      map[k] = {ColumnMap::split, ny, ny + 1, 0.0};
      ny += 2;
    }
  }

  const int m = lp.num_rows() + static_cast<int>(bound_rows.size());
  std::vector<std::vector<double>> d(m, std::vector<double>(ny, 0.0));
  std::vector<double> e(m, 0.0);
  for (int i = 0; i < lp.num_rows(); ++i) {
    e[i] = lp.rhs[i];
    for (int k = 0; k < nv; ++k) {
      const double a = lp.rows[i][k];
      if (a == 0.0) continue;
      switch (map[k].kind) {
        case ColumnMap::shifted:
          d[i][map[k].col] += a;
          e[i] -= a * map[k].offset;
          break;
        case ColumnMap::flipped:
          d[i][map[k].col] -= a;
          e[i] -= a * map[k].offset;
          break;
        case ColumnMap::split:
          d[i][map[k].col] += a;
          d[i][map[k].col2] -= a;
          break;
      }
    }
  }
  for (std::size_t r = 0; r < bound_rows.size(); ++r) {
    const int i = lp.num_rows() + static_cast<int>(r);
    d[i][bound_rows[r].first] = 1.0;
    e[i] = bound_rows[r].second;
  }

  int nart = 0;
  for (int i = 0; i < m; ++i)
    if (e[i] < 0.0) ++nart;
  const int slack0 = ny;
  const int art0 = ny + m;
  const int ncols = ny + m + nart;

  Tableau t(m, ncols);
  std::vector<int> basis(m);
  int next_art = art0;
  for (int i = 0; i < m; ++i) {
    const double s = e[i] < 0.0 ? -1.0 : 1.0;
    for (int j = 0; j < ny; ++j) t.at(i, j) = s * d[i][j];
    t.at(i, slack0 + i) = s;
    t.rhs(i) = s * e[i];
    if (s < 0.0) {
      t.at(i, next_art) = 1.0;
      basis[i] = next_art++;
    } else {
      basis[i] = slack0 + i;
    }
  }

  LpSolution sol;
  std::vector<double> reduced;
  std::vector<char> allowed(ncols, 1);

  if (nart > 0) {
    std::vector<double> cost1(ncols, 0.0);
    for (int j = art0; j < ncols; ++j) cost1[j] = -1.0;
    run_phase(t, cost1, allowed, basis, reduced, sol.pivots);
    double scale = 1.0;
    for (double v : e) scale = std::max(scale, std::abs(v));
    if (reduced[ncols] > 1e-9 * scale) {
      sol.status = LpStatus::infeasible;
      return sol;
    }
    // Push remaining zero-level artificials out of the basis.
    for (int i = 0; i < m; ++i) {
      if (basis[i] < art0) continue;
      for (int j = 0; j < art0; ++j) {
        if (std::abs(t.at(i, j)) > 1e-9) {
          t.pivot(i, j, reduced, basis);
          break;
        }
      }
    }
    for (int j = art0; j < ncols; ++j) allowed[j] = 0;
  }

  std::vector<double> cost2(ncols, 0.0);
  for (int k = 0; k < nv; ++k) {
    const double c = lp.objective[k];
    switch (map[k].kind) {
      case ColumnMap::shifted: cost2[map[k].col] += c; break;
      case ColumnMap::flipped: cost2[map[k].col] -= c; break;
      case ColumnMap::split:
        cost2[map[k].col] += c;
        cost2[map[k].col2] -= c;
        break;
    }
  }
  if (run_phase(t, cost2, allowed, basis, reduced, sol.pivots) == PhaseResult::unbounded) {
    sol.status = LpStatus::unbounded;
    return sol;
  }

  std::vector<double> y(ncols, 0.0);
  for (int i = 0; i < m; ++i) y[basis[i]] = std::max(t.rhs(i), 0.0);
  sol.x.resize(nv);
  for (int k = 0; k < nv; ++k) {
    switch (map[k].kind) {
      case ColumnMap::shifted: sol.x[k] = map[k].offset + y[map[k].col]; break;
      case ColumnMap::flipped: sol.x[k] = map[k].offset - y[map[k].col]; break;
      case ColumnMap::split: sol.x[k] = y[map[k].col] - y[map[k].col2]; break;
    }
  }
  sol.status = LpStatus::optimal;
  sol.max_reduced_cost = -kInf;
  for (int j = 0; j < ncols; ++j)
    if (allowed[j]) sol.max_reduced_cost = std::max(sol.max_reduced_cost, reduced[j]);
  sol.objective = 0.0;
  for (int k = 0; k < nv; ++k) sol.objective += lp.objective[k] * sol.x[k];
  for (int i = 0; i < lp.num_rows(); ++i) {
    double lhs = 0.0;
    for (int k = 0; k < nv; ++k) lhs += lp.rows[i][k] * sol.x[k];
    if (std::abs(lp.rhs[i] - lhs) <= 1e-8 * (1.0 + std::abs(lp.rhs[i]))) sol.active_rows.push_back(i);
  }
  return sol;
}

}  // namespace qwb
