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

#ifndef APPROACHLAB_POLYTOPE_HPP_
#define APPROACHLAB_POLYTOPE_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "approachlab/linalg.hpp"

namespace approachlab {

// Convex hull of a non-empty list of vertices in a common ambient space.
// Redundant and repeated vertices are allowed.
class Polytope {
 public:
  // Throws DimensionError for an empty list or mixed vertex lengths.
  explicit Polytope(std::vector<RationalVector> vertices);

  // Standard simplex {e_1, ..., e_n}.
  static Polytope simplex(std::size_t n);
  // [0,1]^n with vertices in binary counting order (coordinate 0 fastest).
  static Polytope unit_cube(std::size_t n);
  static Polytope point(RationalVector p);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  const std::vector<RationalVector>& vertices() const { return vertices_; }
  const RationalVector& vertex(std::size_t i) const { return vertices_[i]; }

  // max over vertices of <direction, v>
  Rational support(const RationalVector& direction) const;
  // First listed index holding exactly q.
  std::optional<std::size_t> vertex_index(const RationalVector& q) const;
  // Membership with fast paths for vertices, the standard simplex and boxes.
  bool contains(const RationalVector& q) const;

  bool is_standard_simplex() const { return simplex_; }
  // (lower, upper) corners when the vertex set is exactly the corner set of
  // an axis-aligned box.
  const std::optional<std::pair<RationalVector, RationalVector>>& box() const { return box_; }

  Polytope scaled(const Rational& factor) const;

  friend bool operator==(const Polytope& lhs, const Polytope& rhs) { return lhs.vertices_ == rhs.vertices_; }

 private:
  void build_index();

  std::size_t dim_ = 0;
  std::vector<RationalVector> vertices_;
  std::vector<std::size_t> sorted_;
  bool simplex_ = false;
  // Set when the vertex set is exactly the corner set of an axis-aligned box.
  std::optional<std::pair<RationalVector, RationalVector>> box_;
};

// Convex coefficients lambda over P's listed vertices with sum lambda_i v_i = q,
// or nullopt when q is outside P. Throws DimensionError on length mismatch.
std::optional<RationalVector> polytope_membership(const RationalVector& q, const Polytope& P);

struct AffineSpan {
  RationalVector base;
  std::vector<RationalVector> directions;
};

// base = first vertex; directions = the independent subset of v_i - v_0 in
// listing order.
AffineSpan affine_span(const Polytope& P);

// Vertices are the row-major flattenings of a b^T over all vertex pairs, with
// the first factor's index varying slowest.
Polytope tensor_product(const Polytope& first, const Polytope& second);

// Image of P under x -> m x.
Polytope linear_image(const RationalMatrix& m, const Polytope& P);

// False when vertex i is a convex combination of the vertices that differ
// from it.
bool is_extreme_vertex(const Polytope& P, std::size_t i);

}  // namespace approachlab

#endif  // APPROACHLAB_POLYTOPE_HPP_
