// Copyright 2026 The approachlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef APPROACHLAB_LP_HPP_
#define APPROACHLAB_LP_HPP_

#include <cstddef>
#include <variant>
#include <vector>

#include "approachlab/linalg.hpp"

namespace approachlab {

// <coeffs, x> (= or <=) rhs, depending on which list of the program holds it.
struct LinearConstraint {
  RationalVector coeffs;
  Rational rhs;
};

// maximize <objective, x> subject to the equalities and inequalities.
// Variables are free; sign constraints are written as -x_i <= 0.
struct LinearProgram {
  RationalVector objective;
  std::vector<LinearConstraint> equalities;
  std::vector<LinearConstraint> inequalities;
  std::size_t num_vars = 0;

  explicit LinearProgram(std::size_t n) : objective(n), num_vars(n) {}

  void add_equality(RationalVector coeffs, Rational rhs) { equalities.push_back({std::move(coeffs), std::move(rhs)}); }
  void add_inequality(RationalVector coeffs, Rational rhs) {
    inequalities.push_back({std::move(coeffs), std::move(rhs)});
  }
  // x_i >= 0
  void add_nonnegative(std::size_t i);
  // lo <= x_i <= hi
  void add_bounds(std::size_t i, const Rational& lo, const Rational& hi);
};

struct LpOptimal {
  RationalVector x;
  Rational value;
};
struct LpInfeasible {};
struct LpUnbounded {};

using LpOutcome = std::variant<LpOptimal, LpInfeasible, LpUnbounded>;

// Two-phase primal simplex over exact rationals with Bland's rule. The
// returned optimum is checked against every constraint before it is reported.
// Throws DimensionError when a constraint or the objective has the wrong length.
LpOutcome lp_solve(const LinearProgram& lp);

inline const LpOptimal* as_optimal(const LpOutcome& outcome) { return std::get_if<LpOptimal>(&outcome); }

}  // namespace approachlab

#endif  // APPROACHLAB_LP_HPP_
