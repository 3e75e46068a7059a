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

#ifndef APPROACHLAB_INSTANCES_HPP_
#define APPROACHLAB_INSTANCES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "approachlab/linalg.hpp"
#include "approachlab/polytope.hpp"

namespace approachlab {

// p -> linear p + offset
struct AffineMapGen {
  RationalMatrix linear;
  RationalVector offset;
  std::string label;

  static AffineMapGen identity(std::size_t d, std::string label);
  static AffineMapGen constant(const RationalVector& value, std::string label);

  std::size_t dim() const { return offset.size(); }
  bool is_linear() const { return offset.is_zero(); }
  RationalVector apply(const RationalVector& p) const;
  // Id - linear; the regret term is <M p - offset, l>.
  RationalMatrix displacement_matrix() const;
  // p - apply(p)
  RationalVector displacement(const RationalVector& p) const;
};

struct RegretInstance {
  std::string name;
  Polytope P;
  Polytope L;
  std::vector<AffineMapGen> Phi;

  std::size_t dim() const { return P.ambient_dim(); }
  // Throws DimensionError or PreconditionError when the invariants fail.
  void validate() const;
};

// u(p, l) = p^T M l + <p_offset, l> + <l_offset, p> + c
struct BilinearGen {
  RationalMatrix M;
  RationalVector p_offset;
  RationalVector l_offset;
  Rational c;
  std::string label;

  Rational evaluate(const RationalVector& p, const RationalVector& l) const;
  // For fixed p, u(p, .) = <slope, .> + intercept.
  RationalVector slope_at(const RationalVector& p) const;
  Rational intercept_at(const RationalVector& p) const;
  bool is_zero() const;
};

struct ApproachabilityInstance {
  std::string name;
  Polytope P;
  Polytope L;
  std::vector<BilinearGen> U;

  void validate() const;
};

using AnyInstance = std::variant<RegretInstance, ApproachabilityInstance>;

enum class InstanceClass { External, Proper, ImproperValid, Invalid };

std::string to_string(InstanceClass kind);

struct InvalidWitness {
  std::string label;
  RationalVector direction;
};

struct Classification {
  InstanceClass kind = InstanceClass::Invalid;
  // One entry per generator, in generator order; empty for Invalid.
  std::vector<std::pair<std::string, RationalVector>> fixed_points;
  std::optional<InvalidWitness> witness;
};

// Some p in P with phi(p) = p. Vertices are tried first in listing order,
// then an LP over convex coefficients decides.
std::optional<RationalVector> find_fixed_point(const AffineMapGen& phi, const Polytope& P);

// w with <v - phi(v), w> > 0 for every vertex v, maximizing the margin over
// the box |w_i| <= 1; nullopt exactly when a fixed point exists.
std::optional<RationalVector> separating_direction(const AffineMapGen& phi, const Polytope& P);

// Decided on generators. Invalid takes precedence, then External, then
// Proper, then ImproperValid.
Classification classify(const RegretInstance& inst);

// sum_t <p_t - phi(p_t), l_t> for each generator, without membership checks.
std::vector<Rational> generator_regrets(const RegretInstance& inst, const std::vector<RationalVector>& plays,
                                        const std::vector<RationalVector>& losses);
// sum_t u(p_t, l_t) for each generator, without membership checks.
std::vector<Rational> generator_payoffs(const ApproachabilityInstance& inst, const std::vector<RationalVector>& plays,
                                        const std::vector<RationalVector>& losses);

// Throws InvalidPlayError naming the round when a play or loss leaves its set.
void check_sequence(const Polytope& P, const Polytope& L, const std::vector<RationalVector>& plays,
                    const std::vector<RationalVector>& losses);

// Both return 0 for empty sequences.
Rational regret_of_play(const RegretInstance& inst, const std::vector<RationalVector>& plays,
                        const std::vector<RationalVector>& losses);
Rational apploss_of_play(const ApproachabilityInstance& inst, const std::vector<RationalVector>& plays,
                         const std::vector<RationalVector>& losses);

// max_i w_i * (regret against generator i). Requires a Proper instance and
// positive weights (PreconditionError otherwise).
Rational weighted_regret(const RegretInstance& inst, const std::vector<Rational>& weights,
                         const std::vector<RationalVector>& plays, const std::vector<RationalVector>& losses);

// One constraint per generator: u(p, l) = <p - phi(p), l>.
ApproachabilityInstance regret_as_approachability(const RegretInstance& inst);

}  // namespace approachlab

#endif  // APPROACHLAB_INSTANCES_HPP_
