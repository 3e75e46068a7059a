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

#ifndef APPROACHLAB_REDUCTIONS_HPP_
#define APPROACHLAB_REDUCTIONS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "approachlab/instances.hpp"

namespace approachlab {

// Approachability to online linear optimization over the coefficient simplex
// of the constraint generators. The target has P' = simplex(k), constant
// generators onto its vertices, and L' = G(-(P^ x L^)) where p^ = (p, 1),
// l^ = (l, 1) and row k of G pairs flat(p^ l^T) with constraint k.
struct ClassicalReduction {
  ApproachabilityInstance source;
  RegretInstance target;
  RationalMatrix pairing;

  // -(u_1(p, l), ..., u_k(p, l)), the loss the inner learner observes.
  RationalVector target_loss(const RationalVector& p, const RationalVector& l) const;
  // See halfspace_action.
  RationalVector action(const RationalVector& coeffs) const;
};

ClassicalReduction classical_reduce(const ApproachabilityInstance& inst);

// Some p in P with sum_k coeffs_k u_k(p, w) <= 0 for every vertex w of L.
// Vertices of P are tried in order before the LP over convex coefficients.
// Throws NotApproachableError when no such p exists.
RationalVector halfspace_action(const ApproachabilityInstance& inst, const RationalVector& coeffs);

// Approachability to improper regret over X = simplex(k) x P^. Generator j
// is the linear shift x -> x + e_j (x) (sum of the k blocks of x), and
// L' = M_B L^ with B(e_j (x) p^, l^) = -u_j(p, l). The hat coordinates carry
// an extra constant 1 only when some constraint has an affine part.
struct TightImproperReduction {
  ApproachabilityInstance source;
  RegretInstance target;
  std::vector<std::pair<std::string, std::string>> generator_bijection;
  bool augmented = false;
  RationalMatrix loss_matrix;

  // coeffs (x) p^, flattened; coeffs must lie in the simplex.
  RationalVector map_play(const RationalVector& coeffs, const RationalVector& p) const;
  RationalVector map_play(const RationalVector& p) const;
  RationalVector map_loss(const RationalVector& l) const;
};

TightImproperReduction tight_improper_reduce(const ApproachabilityInstance& inst);

// phi~_i = w_i phi_i - (w_i - 1) Id. Requires a Proper input and positive
// weights.
RegretInstance weighted_to_improper(const RegretInstance& inst, const std::vector<Rational>& weights);

struct WeightedProper {
  RegretInstance instance;
  Rational scale;
};

// With W = max w_i: phi'_i = (w_i/W) phi_i + (1 - w_i/W) Id and L' = W L.
WeightedProper weighted_to_proper(const RegretInstance& inst, const std::vector<Rational>& weights);

// Distance-to-set constraints: for each direction v, with a_v the support of
// the target and b_v > 0 the support of the ball,
// u_v = (sum_i v_i u_i - a_v) / b_v. Throws PreconditionError when b_v <= 0.
std::vector<BilinearGen> orthant_reduce(const std::vector<BilinearGen>& components, const Polytope& target,
                                        const Polytope& ball, const std::vector<RationalVector>& directions);

}  // namespace approachlab

#endif  // APPROACHLAB_REDUCTIONS_HPP_
