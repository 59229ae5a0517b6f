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

// Dense two-phase tableau simplex with Bland's rule. Intended for the small
// LPs of the weight tuner (a handful of columns, at most a few hundred rows).

#include <limits>
#include <string>
#include <vector>

namespace qwb {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// maximize objective^T v  subject to  rows * v <= rhs,  lower <= v <= upper.
struct LpProblem {
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  std::vector<double> lower;  // -kInf allowed
  std::vector<double> upper;  // +kInf allowed
  std::vector<std::string> names;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
  /// Appends a variable with the given bounds and objective coefficient; returns its column.
  int add_var(std::string name, double lo, double hi, double obj = 0.0);
  void add_row(std::vector<double> coeffs, double bound);
  void validate() const;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<double> x;
  double objective = 0.0;
  /// Largest phase-two reduced cost at termination; <= kOptimalityTol certifies optimality.
  double max_reduced_cost = 0.0;
  std::vector<int> active_rows;
  int pivots = 0;
};

inline constexpr double kOptimalityTol = 1e-9;

/// Throws std::runtime_error when only numerically negligible pivots remain.
LpSolution solve_lp(const LpProblem& lp);

}  // namespace qwb
