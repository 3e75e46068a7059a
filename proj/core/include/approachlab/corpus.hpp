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

#ifndef APPROACHLAB_CORPUS_HPP_
#define APPROACHLAB_CORPUS_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "approachlab/instances.hpp"

namespace approachlab::corpus {

// Three 3-action instances over the simplex with losses in [-1,1]^3:
// one reducible to external regret, one to proper regret, one to neither.
RegretInstance figure2a();
RegretInstance figure2b();
RegretInstance figure2c();

// P = simplex over d'+1 actions, L = [0,1]^(d'+1); constraint i is the regret
// of moving the mass on the first d' actions onto action i. The last action
// satisfies every constraint.
ApproachabilityInstance gap_instance(std::size_t dprime);

// Two blocks of swap-to-one constraints, the first block scaled by eps.
ApproachabilityInstance appendix_b(const Rational& eps, std::size_t d1, std::size_t d2);

// The two 3x3 matrices sharing the left kernel (1,1,1).
RationalMatrix ab_matrix_a();
RationalMatrix ab_matrix_b();
// Id + ga*A + gb*B over the corners and edge midpoints of the square
// [-1,1]^2 in (ga, gb), losses in [0,1]^3.
RegretInstance ab_counterexample();

// Learning with n experts: constant maps onto each vertex of the simplex.
RegretInstance experts(std::size_t n);
// All n^n maps p -> sum_i p_i e_{pi(i)}.
RegretInstance swap_regret(std::size_t n);
// phi_a(x, y) = (x, (2-a) y - a x) for a in {0, 1} over the 2-simplex.
RegretInstance external_alpha();
// A single fixed-point-free translation on the 3-simplex.
RegretInstance translation_instance();

using Params = std::map<std::string, std::string>;

struct Entry {
  std::string name;
  std::string summary;
  // Parameter names with their defaults.
  Params defaults;
};

const std::vector<Entry>& entries();

// Throws PreconditionError for unknown names or parameters; ParseError for
// malformed parameter values.
AnyInstance build(const std::string& name, const Params& params = {});

}  // namespace approachlab::corpus

#endif  // APPROACHLAB_CORPUS_HPP_
