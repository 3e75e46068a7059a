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

#include "approachlab/polytope.hpp"

#include <algorithm>
#include <string>

#include "approachlab/error.hpp"
#include "approachlab/lp.hpp"

namespace approachlab {

Polytope::Polytope(std::vector<RationalVector> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw DimensionError("polytope needs at least one vertex");
  dim_ = vertices_.front().size();
  for (const auto& v : vertices_) {
    if (v.size() != dim_) {
      throw DimensionError("polytope vertices have mixed lengths " + std::to_string(dim_) + " and " +
                           std::to_string(v.size()));
    }
  }
  build_index();
}

Polytope Polytope::simplex(std::size_t n) {
  std::vector<RationalVector> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back(RationalVector::unit(n, i));
  return Polytope(std::move(vs));
}

Polytope Polytope::unit_cube(std::size_t n) {
  std::vector<RationalVector> vs;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RationalVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) v[i] = 1;
    }
    vs.push_back(std::move(v));
  }
  return Polytope(std::move(vs));
}

Polytope Polytope::point(RationalVector p) { return Polytope(std::vector<RationalVector>{std::move(p)}); }

void Polytope::build_index() {
  sorted_.resize(vertices_.size());
  for (std::size_t i = 0; i < sorted_.size(); ++i) sorted_[i] = i;
  std::stable_sort(sorted_.begin(), sorted_.end(),
                   [&](std::size_t a, std::size_t b) { return vertices_[a] < vertices_[b]; });
  std::size_t distinct = 0;
  for (std::size_t k = 0; k < sorted_.size(); ++k) {
    if (k == 0 || vertices_[sorted_[k]] != vertices_[sorted_[k - 1]]) ++distinct;
  }

  simplex_ = distinct == dim_;
  for (const auto& v : vertices_) {
    if (!simplex_) break;
    std::size_t ones = 0;
    for (const auto& x : v) {
      if (x.is_one()) {
        ++ones;
      } else if (!x.is_zero()) {
        simplex_ = false;
      }
    }
    if (ones != 1) simplex_ = false;
  }

  RationalVector lo = vertices_.front();
  RationalVector hi = vertices_.front();
  for (const auto& v : vertices_) {
    for (std::size_t i = 0; i < dim_; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  std::size_t free_coords = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (lo[i] != hi[i]) ++free_coords;
  }
  if (free_coords >= 24 || distinct != (std::size_t{1} << free_coords)) return;
  for (const auto& v : vertices_) {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (v[i] != lo[i] && v[i] != hi[i]) return;
    }
  }
  box_.emplace(std::move(lo), std::move(hi));
}

Rational Polytope::support(const RationalVector& direction) const {
  Rational best = dot(direction, vertices_.front());
  for (std::size_t i = 1; i < vertices_.size(); ++i) best = std::max(best, dot(direction, vertices_[i]));
  return best;
}

std::optional<std::size_t> Polytope::vertex_index(const RationalVector& q) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), q,
                             [&](std::size_t i, const RationalVector& key) { return vertices_[i] < key; });
  if (it == sorted_.end() || vertices_[*it] != q) return std::nullopt;
  return *it;
}

bool Polytope::contains(const RationalVector& q) const {
  if (q.size() != dim_) throw DimensionError("membership: point length differs from polytope dimension");
  if (vertex_index(q)) return true;
  if (simplex_) {
    for (const auto& x : q) {
      if (x.sign() < 0) return false;
    }
    return q.sum().is_one();
  }
  if (box_) {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (q[i] < box_->first[i] || q[i] > box_->second[i]) return false;
    }
    return true;
  }
  return polytope_membership(q, *this).has_value();
}

Polytope Polytope::scaled(const Rational& factor) const {
  std::vector<RationalVector> vs = vertices_;
  for (auto& v : vs) v *= factor;
  return Polytope(std::move(vs));
}

std::optional<RationalVector> polytope_membership(const RationalVector& q, const Polytope& P) {
  if (q.size() != P.ambient_dim()) {
    throw DimensionError("membership: point length " + std::to_string(q.size()) + " vs polytope dimension " +
                         std::to_string(P.ambient_dim()));
  }
  const std::size_t n = P.num_vertices();
  if (auto idx = P.vertex_index(q)) return RationalVector::unit(n, *idx);
  if (P.is_standard_simplex()) {
    RationalVector lambda(n);
    Rational total;
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i].sign() < 0) return std::nullopt;
      total += q[i];
      if (!q[i].is_zero()) lambda[*P.vertex_index(RationalVector::unit(q.size(), i))] = q[i];
    }
    if (!total.is_one()) return std::nullopt;
    return lambda;
  }
  LinearProgram lp(n);
  for (std::size_t k = 0; k < P.ambient_dim(); ++k) {
    RationalVector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = P.vertex(j)[k];
    lp.add_equality(std::move(row), q[k]);
  }
  lp.add_equality(RationalVector::constant(n, 1), 1);
  for (std::size_t j = 0; j < n; ++j) lp.add_nonnegative(j);
  const LpOutcome outcome = lp_solve(lp);
  if (const auto* opt = as_optimal(outcome)) return opt->x;
  return std::nullopt;
}

AffineSpan affine_span(const Polytope& P) {
  AffineSpan out{P.vertex(0), {}};
  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < P.num_vertices(); ++i) diffs.push_back(P.vertex(i) - P.vertex(0));
  for (auto i : independent_subset(diffs)) out.directions.push_back(diffs[i]);
  return out;
}

Polytope tensor_product(const Polytope& first, const Polytope& second) {
  std::vector<RationalVector> vs;
  vs.reserve(first.num_vertices() * second.num_vertices());
  for (const auto& a : first.vertices()) {
    for (const auto& b : second.vertices()) vs.push_back(RationalMatrix::outer(a, b).flatten());
  }
  return Polytope(std::move(vs));
}

Polytope linear_image(const RationalMatrix& m, const Polytope& P) {
  std::vector<RationalVector> vs;
  vs.reserve(P.num_vertices());
  for (const auto& v : P.vertices()) vs.push_back(m * v);
  return Polytope(std::move(vs));
}

bool is_extreme_vertex(const Polytope& P, std::size_t i) {
  const RationalVector& v = P.vertex(i);
  std::vector<RationalVector> others;
  for (const auto& w : P.vertices()) {
    if (w != v) others.push_back(w);
  }
  if (others.empty()) return true;
  return !polytope_membership(v, Polytope(std::move(others))).has_value();
}

}  // namespace approachlab
