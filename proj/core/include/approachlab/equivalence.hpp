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

#ifndef APPROACHLAB_EQUIVALENCE_HPP_
#define APPROACHLAB_EQUIVALENCE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "approachlab/instances.hpp"
#include "approachlab/lp.hpp"

namespace approachlab {

enum class Linearization {
  // Generators were already linear and aff(P) misses the origin.
  None,
  // aff(P) lies in {<a, x> = 1}; each offset b was folded in as b a^T.
  Folded,
  // P and L gained a trailing coordinate (1 for plays, 0 for losses).
  Augmented,
};

std::string to_string(Linearization kind);

// An instance whose generators are purely linear and whose action set spans
// an affine subspace avoiding the origin.
struct LinearizedInstance {
  RegretInstance base;
  Linearization linearization = Linearization::None;
  // The functional a for Folded; empty otherwise.
  RationalVector functional;
};

LinearizedInstance canonicalize(const RegretInstance& inst);

// Generators p -> p + S(phi(p) - p), losses mapped by (S^T)^{-1}. Throws
// PreconditionError for singular S.
RegretInstance apply_S(const LinearizedInstance& inst, const RationalMatrix& S);

// <M_phi p, l> = <M_phi' p, l''> over every generator, P vertex and L vertex,
// where l'' is the matching vertex of the target's L.
bool bilinear_identity_holds(const LinearizedInstance& inst, const RationalMatrix& S, const RegretInstance& target);

// The left kernels of all M_phi intersect in {0}; rank is that of the
// horizontally stacked M_phi blocks and equals dim.
struct LeftKernelEmpty {
  std::size_t rank = 0;
  std::size_t dim = 0;
};

// phi_second(x) - x = -alpha (phi_first(x) - x) != 0 at the extreme point x.
struct OpposedDisplacement {
  RationalVector x;
  std::string first;
  std::string second;
  Rational alpha;
};

using Obstruction = std::variant<LeftKernelEmpty, OpposedDisplacement>;

// Which condition of the external characterization failed.
struct ExternalFailure {
  // "fixed-point": generator 'first' has more than one fixed point in aff(P).
  // "difference": generators 'first' and 'second' do not differ by a constant.
  std::string condition;
  std::string first;
  std::string second;
};

enum class VerdictStatus { ExternalEquivalent, ProperEquivalent, NotExternal, Obstructed, NoInvertibleFound };

std::string to_string(VerdictStatus status);

struct EquivalenceVerdict {
  VerdictStatus status = VerdictStatus::NoInvertibleFound;
  std::optional<RationalMatrix> S;
  std::optional<RegretInstance> target;
  std::optional<Obstruction> obstruction;
  std::optional<ExternalFailure> external_failure;
  std::size_t trials = 0;
  std::size_t span_dim = 0;
  std::int64_t coefficient_range = 0;
  // Upper bound on the chance that an invertible element exists in the span
  // but every trial missed it.
  double failure_bound = 0.0;
};

// Throws PreconditionError for an Invalid instance.
EquivalenceVerdict check_external(const LinearizedInstance& inst);

// S with p + S(phi(p) - p) = p_phi on P, completed to an invertible matrix by
// appending standard basis vectors to both bases. Throws PreconditionError
// when phi lacks a fixed point in P or has several in aff(P).
RationalMatrix construct_external_S(const AffineMapGen& phi, const Polytope& P);

// Nonzero v with v^T M_phi = 0 for every generator, if any. Throws
// PreconditionError when P is full-dimensional.
std::optional<RationalVector> shared_left_kernel(const LinearizedInstance& inst);

std::optional<OpposedDisplacement> opposed_displacement(const LinearizedInstance& inst);

// Re-derives the witness from scratch; true when it holds exactly.
bool verify_obstruction(const LinearizedInstance& inst, const Obstruction& obstruction);

// The convex set of S with p_j + S(phi_i(p_j) - p_j) in P for every generator
// i and vertex j. Variables of the program are the d*d entries of S
// (row-major) followed by lambda_{i,j,k}.
struct ProperCone {
  std::size_t dim = 0;
  std::size_t num_vertices = 0;
  std::size_t num_generators = 0;
  LinearProgram program{0};
  // (i, j) -> phi_i(p_j) - p_j
  std::vector<RationalVector> displacements;
  Polytope P = Polytope::point(RationalVector());

  // Exact membership of a given S, checked constraint by constraint.
  bool contains(const RationalMatrix& S) const;
};

ProperCone proper_cone_lp(const LinearizedInstance& inst);

// Basis of span(cone), each element a member of the cone with entries in
// [-1, 1].
std::vector<RationalMatrix> cone_span_basis(const ProperCone& cone);

// Obstructions, then randomized search for an invertible element of the cone
// span. Trial t draws coefficients in [1, K] from a generator seeded by
// (seed, t), so the verdict does not depend on evaluation order.
EquivalenceVerdict decide_proper(const LinearizedInstance& inst, std::size_t trials, std::uint64_t seed);

}  // namespace approachlab

#endif  // APPROACHLAB_EQUIVALENCE_HPP_
