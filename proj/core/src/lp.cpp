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

#include "approachlab/lp.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "approachlab/error.hpp"

namespace approachlab {

void LinearProgram::add_nonnegative(std::size_t i) {
  RationalVector row(num_vars);
  row[i] = -1;
  add_inequality(std::move(row), 0);
}

void LinearProgram::add_bounds(std::size_t i, const Rational& lo, const Rational& hi) {
  RationalVector upper(num_vars);
  upper[i] = 1;
  add_inequality(std::move(upper), hi);
  RationalVector lower(num_vars);
  lower[i] = -1;
  add_inequality(std::move(lower), -lo);
}

namespace {

// Dense simplex tableau. Row i reads sum_j rows[i][j] y_j = rhs[i] with the
// basic variable basis[i]; reduced[j] is the reduced cost of column j.
class Tableau {
 public:
  Tableau(std::size_t cols) : cols_(cols), reduced_(cols) {}

  void add_row(std::vector<Rational> coeffs, Rational rhs, std::size_t basic) {
    rows_.push_back(std::move(coeffs));
    rhs_.push_back(std::move(rhs));
    basis_.push_back(basic);
  }

  std::size_t num_rows() const { return rows_.size(); }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Rational& rhs(std::size_t r) const { return rhs_[r]; }
  const Rational& entry(std::size_t r, std::size_t c) const { return rows_[r][c]; }

  // Installs objective coefficients and prices out the current basis.
  void set_objective(const std::vector<Rational>& costs) {
    reduced_ = costs;
    reduced_rhs_ = Rational();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational cb = costs[basis_[r]];
      if (cb.is_zero()) continue;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (!rows_[r][c].is_zero()) reduced_[c] -= cb * rows_[r][c];
      }
      reduced_rhs_ -= cb * rhs_[r];
    }
  }

  // Current objective value.
  Rational value() const { return -reduced_rhs_; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = rows_[r][c].reciprocal();
    auto& prow = rows_[r];
    if (!inv.is_one()) {
      for (auto& x : prow) {
        if (!x.is_zero()) x *= inv;
      }
      rhs_[r] *= inv;
    }
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!prow[k].is_zero()) nz.push_back(k);
    }
    const auto eliminate = [&](std::vector<Rational>& row, Rational& rhs) {
      if (row[c].is_zero()) return;
      const Rational factor = row[c];
      for (auto k : nz) row[k] -= factor * prow[k];
      rhs -= factor * rhs_[r];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i], rhs_[i]);
    }
    eliminate(reduced_, reduced_rhs_);
    basis_[r] = c;
  }

  enum class Result { Optimal, Unbounded };

  // Maximizes with Bland's rule over columns whose index is below limit.
  Result run(std::size_t limit) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t c = 0; c < limit; ++c) {
        if (reduced_[c].sign() > 0) {
          enter = c;
          break;
        }
      }
      if (!enter) return Result::Optimal;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& a = rows_[r][*enter];
        if (a.sign() <= 0) continue;
        Rational ratio = rhs_[r] / a;
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (!leave) return Result::Unbounded;
      pivot(*leave, *enter);
    }
  }

  void remove_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<long>(r));
    rhs_.erase(rhs_.begin() + static_cast<long>(r));
    basis_.erase(basis_.begin() + static_cast<long>(r));
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
  Rational reduced_rhs_;
};

void check_shape(const LinearProgram& lp) {
  const auto check = [&](const RationalVector& v, const char* what) {
    if (v.size() != lp.num_vars) {
      throw DimensionError(std::string("lp_solve: ") + what + " has length " + std::to_string(v.size()) +
                           ", expected " + std::to_string(lp.num_vars));
    }
  };
  check(lp.objective, "objective");
  for (const auto& c : lp.equalities) check(c.coeffs, "equality");
  for (const auto& c : lp.inequalities) check(c.coeffs, "inequality");
}

bool satisfies(const LinearProgram& lp, const RationalVector& x) {
  for (const auto& c : lp.equalities) {
    if (dot(c.coeffs, x) != c.rhs) return false;
  }
  for (const auto& c : lp.inequalities) {
    if (dot(c.coeffs, x) > c.rhs) return false;
  }
  return true;
}

}  // namespace

LpOutcome lp_solve(const LinearProgram& lp) {
  check_shape(lp);
  const std::size_t n = lp.num_vars;

  // Single-entry rows -x_i <= 0 become sign constraints instead of rows.
  std::vector<bool> nonneg(n, false);
  std::vector<const LinearConstraint*> ineq_rows;
  for (const auto& c : lp.inequalities) {
    std::size_t nonzeros = 0;
    std::size_t at = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!c.coeffs[j].is_zero()) {
        ++nonzeros;
        at = j;
      }
    }
    if (nonzeros == 0) {
      if (c.rhs.sign() < 0) return LpInfeasible{};
      continue;
    }
    if (nonzeros == 1 && c.coeffs[at].sign() < 0 && c.rhs.is_zero()) {
      nonneg[at] = true;
      continue;
    }
    ineq_rows.push_back(&c);
  }
  std::vector<const LinearConstraint*> eq_rows;
  for (const auto& c : lp.equalities) {
    if (c.coeffs.is_zero()) {
      if (!c.rhs.is_zero()) return LpInfeasible{};
      continue;
    }
    eq_rows.push_back(&c);
  }

  // Column layout: one column per nonnegative variable, two per free one
  // (x = y+ - y-), then slacks, then artificials.
  std::vector<std::size_t> pos_col(n);
  std::vector<std::optional<std::size_t>> neg_col(n);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = cols++;
    if (!nonneg[j]) neg_col[j] = cols++;
  }
  const std::size_t structural = cols;
  const std::size_t slack_begin = cols;
  cols += ineq_rows.size();
  const std::size_t art_begin = cols;
  std::size_t artificials = 0;
  for (const auto* c : ineq_rows) {
    if (c->rhs.sign() < 0) ++artificials;
  }
  artificials += eq_rows.size();
  cols += artificials;

  Tableau tab(cols);
  const auto expand = [&](const LinearConstraint& c, bool negate) {
    std::vector<Rational> row(cols);
    for (std::size_t j = 0; j < n; ++j) {
      if (c.coeffs[j].is_zero()) continue;
      const Rational a = negate ? -c.coeffs[j] : c.coeffs[j];
      row[pos_col[j]] = a;
      if (neg_col[j]) row[*neg_col[j]] = -a;
    }
    return row;
  };
  std::size_t next_art = art_begin;
  for (std::size_t i = 0; i < ineq_rows.size(); ++i) {
    const auto& c = *ineq_rows[i];
    if (c.rhs.sign() >= 0) {
      auto row = expand(c, false);
      row[slack_begin + i] = 1;
      tab.add_row(std::move(row), c.rhs, slack_begin + i);
    } else {
      auto row = expand(c, true);
      row[slack_begin + i] = -1;
      row[next_art] = 1;
      tab.add_row(std::move(row), -c.rhs, next_art++);
    }
  }
  for (const auto* c : eq_rows) {
    const bool negate = c->rhs.sign() < 0;
    auto row = expand(*c, negate);
    row[next_art] = 1;
    tab.add_row(std::move(row), negate ? -c->rhs : c->rhs, next_art++);
  }

  if (artificials > 0) {
    std::vector<Rational> phase1(cols);
    for (std::size_t c = art_begin; c < cols; ++c) phase1[c] = -1;
    tab.set_objective(phase1);
    tab.run(cols);
    if (tab.value().sign() < 0) return LpInfeasible{};
    // Drive remaining (zero-valued) artificials out of the basis; rows where
    // that is impossible are redundant.
    for (std::size_t r = tab.num_rows(); r-- > 0;) {
      if (tab.basis()[r] < art_begin) continue;
      std::optional<std::size_t> col;
      for (std::size_t c = 0; c < art_begin; ++c) {
        if (!tab.entry(r, c).is_zero()) {
          col = c;
          break;
        }
      }
      if (col) {
        tab.pivot(r, *col);
      } else {
        tab.remove_row(r);
      }
    }
  }

  std::vector<Rational> costs(cols);
  for (std::size_t j = 0; j < n; ++j) {
    costs[pos_col[j]] = lp.objective[j];
    if (neg_col[j]) costs[*neg_col[j]] = -lp.objective[j];
  }
  tab.set_objective(costs);
  if (tab.run(art_begin) == Tableau::Result::Unbounded) return LpUnbounded{};

  std::vector<Rational> y(structural);
  for (std::size_t r = 0; r < tab.num_rows(); ++r) {
    if (tab.basis()[r] < structural) y[tab.basis()[r]] = tab.rhs(r);
  }
  RationalVector x(n);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = y[pos_col[j]];
    if (neg_col[j]) x[j] -= y[*neg_col[j]];
  }
  if (!satisfies(lp, x)) throw std::logic_error("lp_solve: simplex produced an infeasible point");
  Rational value = dot(lp.objective, x);
  return LpOptimal{std::move(x), std::move(value)};
}

}  // namespace approachlab
