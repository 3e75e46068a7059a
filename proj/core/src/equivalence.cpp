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

#include "approachlab/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "approachlab/error.hpp"
#include "approachlab/random.hpp"

namespace approachlab {
namespace {

RationalMatrix columns_of(const std::vector<RationalVector>& cols, std::size_t rows) {
  if (cols.empty()) return RationalMatrix(rows, 0);
  return RationalMatrix::from_columns(cols);
}

// Appends standard basis vectors to an independent set until it spans R^d.
std::vector<RationalVector> complete_basis(std::vector<RationalVector> vectors, std::size_t d) {
  for (std::size_t i = 0; i < d && vectors.size() < d; ++i) {
    vectors.push_back(RationalVector::unit(d, i));
    if (independent_subset(vectors).size() != vectors.size()) vectors.pop_back();
  }
  return vectors;
}

void require_valid(const RegretInstance& inst) {
  const Classification cls = classify(inst);
  if (cls.kind == InstanceClass::Invalid) {
    throw PreconditionError("instance '" + inst.name + "' is invalid: generator '" + cls.witness->label +
                            "' has no fixed point in P");
  }
}

RationalMatrix stacked_displacements(const RegretInstance& inst) {
  const std::size_t d = inst.dim();
  RationalMatrix out(d, d * inst.Phi.size());
  for (std::size_t g = 0; g < inst.Phi.size(); ++g) {
    const RationalMatrix M = inst.Phi[g].displacement_matrix();
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) out(r, g * d + c) = M(r, c);
    }
  }
  return out;
}

}  // namespace

std::string to_string(Linearization kind) {
  switch (kind) {
    case Linearization::None:
      return "none";
    case Linearization::Folded:
      return "folded";
    case Linearization::Augmented:
      return "augmented";
  }
  return "none";
}

std::string to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::ExternalEquivalent:
      return "ExternalEquivalent";
    case VerdictStatus::ProperEquivalent:
      return "ProperEquivalent";
    case VerdictStatus::NotExternal:
      return "NotExternal";
    case VerdictStatus::Obstructed:
      return "Obstructed";
    case VerdictStatus::NoInvertibleFound:
      return "NoInvertibleFound";
  }
  return "NoInvertibleFound";
}

LinearizedInstance canonicalize(const RegretInstance& inst) {
  inst.validate();
  const std::size_t d = inst.dim();
  bool linear = true;
  for (const auto& g : inst.Phi) linear = linear && g.is_linear();

  // a with <a, v> = 1 on every vertex exists iff aff(P) misses the origin.
  const RationalMatrix V = RationalMatrix::from_rows(inst.P.vertices());
  const auto functional = solve(V, RationalVector::constant(inst.P.num_vertices(), 1));
  if (functional) {
    if (linear) return {inst, Linearization::None, {}};
    RegretInstance out{inst.name, inst.P, inst.L, {}};
    for (const auto& g : inst.Phi) {
      out.Phi.push_back({g.linear + RationalMatrix::outer(g.offset, *functional), RationalVector(d), g.label});
    }
    return {std::move(out), Linearization::Folded, *functional};
  }

  std::vector<RationalVector> pv;
  for (const auto& v : inst.P.vertices()) pv.push_back(v.appended(1));
  std::vector<RationalVector> lv;
  for (const auto& w : inst.L.vertices()) lv.push_back(w.appended(0));
  RegretInstance out{inst.name, Polytope(std::move(pv)), Polytope(std::move(lv)), {}};
  for (const auto& g : inst.Phi) {
    RationalMatrix lin(d + 1, d + 1);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) lin(r, c) = g.linear(r, c);
      lin(r, d) = g.offset[r];
    }
    lin(d, d) = 1;
    out.Phi.push_back({std::move(lin), RationalVector(d + 1), g.label});
  }
  return {std::move(out), Linearization::Augmented, {}};
}

RegretInstance apply_S(const LinearizedInstance& inst, const RationalMatrix& S) {
  const std::size_t d = inst.base.dim();
  if (S.rows() != d || S.cols() != d) throw DimensionError("apply_S: S must be " + std::to_string(d) + "x" + std::to_string(d));
  if (det_exact(S).is_zero()) throw PreconditionError("apply_S: S is singular");
  const RationalMatrix I = RationalMatrix::identity(d);
  RegretInstance out{inst.base.name, inst.base.P, linear_image(inverse(S.transpose()), inst.base.L), {}};
  for (const auto& g : inst.base.Phi) {
    out.Phi.push_back({I + S * (g.linear - I), S * g.offset, g.label});
  }
  if (!bilinear_identity_holds(inst, S, out)) throw std::logic_error("apply_S: bilinear identity failed");
  return out;
}

bool bilinear_identity_holds(const LinearizedInstance& inst, const RationalMatrix& S, const RegretInstance& target) {
  const RegretInstance& base = inst.base;
  if (target.Phi.size() != base.Phi.size() || target.L.num_vertices() != base.L.num_vertices()) return false;
  if (!(linear_image(S.transpose(), target.L) == base.L)) return false;
  for (std::size_t g = 0; g < base.Phi.size(); ++g) {
    for (const auto& p : base.P.vertices()) {
      const RationalVector before = base.Phi[g].displacement(p);
      const RationalVector after = target.Phi[g].displacement(p);
      for (std::size_t w = 0; w < base.L.num_vertices(); ++w) {
        if (dot(before, base.L.vertex(w)) != dot(after, target.L.vertex(w))) return false;
      }
    }
  }
  return true;
}

RationalMatrix construct_external_S(const AffineMapGen& phi, const Polytope& P) {
  const std::size_t d = P.ambient_dim();
  if (!phi.is_linear()) throw PreconditionError("construct_external_S: generator must be linear");
  const auto fixed = find_fixed_point(phi, P);
  if (!fixed) throw PreconditionError("construct_external_S: '" + phi.label + "' has no fixed point in P");
  const AffineSpan span = affine_span(P);
  const RationalMatrix moved = phi.displacement_matrix() * columns_of(span.directions, d);
  if (rank(moved) != span.directions.size()) {
    throw PreconditionError("construct_external_S: '" + phi.label + "' has more than one fixed point in aff(P)");
  }
  std::vector<RationalVector> offsets;
  for (const auto& v : P.vertices()) offsets.push_back(v - *fixed);
  std::vector<RationalVector> sources;
  std::vector<RationalVector> images;
  for (auto i : independent_subset(offsets)) {
    const RationalVector& vi = P.vertex(i);
    sources.push_back(phi.apply(vi) - vi);
    images.push_back(*fixed - vi);
  }
  const RationalMatrix W = RationalMatrix::from_columns(complete_basis(sources, d));
  const RationalMatrix T = RationalMatrix::from_columns(complete_basis(images, d));
  return T * inverse(W);
}

EquivalenceVerdict check_external(const LinearizedInstance& inst) {
  const RegretInstance& base = inst.base;
  require_valid(base);
  const std::size_t d = base.dim();
  const AffineSpan span = affine_span(base.P);
  const RationalMatrix D = columns_of(span.directions, d);
  EquivalenceVerdict verdict;
  for (std::size_t i = 0; i < base.Phi.size(); ++i) {
    for (std::size_t j = i + 1; j < base.Phi.size(); ++j) {
      if (!((base.Phi[i].linear - base.Phi[j].linear) * D).is_zero()) {
        verdict.status = VerdictStatus::NotExternal;
        verdict.external_failure = ExternalFailure{"difference", base.Phi[i].label, base.Phi[j].label};
        return verdict;
      }
    }
  }
  for (const auto& g : base.Phi) {
    if (rank(g.displacement_matrix() * D) != span.directions.size()) {
      verdict.status = VerdictStatus::NotExternal;
      verdict.external_failure = ExternalFailure{"fixed-point", g.label, ""};
      return verdict;
    }
  }
  RationalMatrix S = construct_external_S(base.Phi.front(), base.P);
  RegretInstance target = apply_S(inst, S);
  if (classify(target).kind != InstanceClass::External) {
    throw std::logic_error("check_external: transformed instance is not external");
  }
  verdict.status = VerdictStatus::ExternalEquivalent;
  verdict.S = std::move(S);
  verdict.target = std::move(target);
  return verdict;
}

std::optional<RationalVector> shared_left_kernel(const LinearizedInstance& inst) {
  const RegretInstance& base = inst.base;
  if (affine_span(base.P).directions.size() >= base.dim()) {
    throw PreconditionError("shared_left_kernel: P is full-dimensional, so the left-kernel test does not apply");
  }
  const auto kernel = left_kernel_basis(stacked_displacements(base));
  if (kernel.empty()) return std::nullopt;
  return kernel.front();
}

std::optional<OpposedDisplacement> opposed_displacement(const LinearizedInstance& inst) {
  const RegretInstance& base = inst.base;
  for (std::size_t x = 0; x < base.P.num_vertices(); ++x) {
    const RationalVector& p = base.P.vertex(x);
    if (base.P.vertex_index(p) != x) continue;
    std::vector<RationalVector> disp;
    for (const auto& g : base.Phi) disp.push_back(g.apply(p) - p);
    std::optional<bool> extreme;
    for (std::size_t i = 0; i < disp.size(); ++i) {
      if (disp[i].is_zero()) continue;
      std::size_t lead = 0;
      while (disp[i][lead].is_zero()) ++lead;
      for (std::size_t j = 0; j < disp.size(); ++j) {
        if (j == i || disp[j].is_zero()) continue;
        const Rational alpha = -disp[j][lead] / disp[i][lead];
        if (alpha.sign() <= 0 || disp[j] != disp[i] * (-alpha)) continue;
        if (!extreme) extreme = is_extreme_vertex(base.P, x);
        if (!*extreme) break;
        return OpposedDisplacement{p, base.Phi[i].label, base.Phi[j].label, alpha};
      }
      if (extreme && !*extreme) break;
    }
  }
  return std::nullopt;
}

bool verify_obstruction(const LinearizedInstance& inst, const Obstruction& obstruction) {
  const RegretInstance& base = inst.base;
  if (const auto* lk = std::get_if<LeftKernelEmpty>(&obstruction)) {
    const std::size_t r = rank(stacked_displacements(base));
    return r == base.dim() && lk->rank == r && lk->dim == base.dim() &&
           affine_span(base.P).directions.size() < base.dim();
  }
  const auto& od = std::get<OpposedDisplacement>(obstruction);
  const AffineMapGen* first = nullptr;
  const AffineMapGen* second = nullptr;
  for (const auto& g : base.Phi) {
    if (g.label == od.first) first = &g;
    if (g.label == od.second) second = &g;
  }
  const auto idx = base.P.vertex_index(od.x);
  if (first == nullptr || second == nullptr || !idx || od.alpha.sign() <= 0) return false;
  const RationalVector d1 = first->apply(od.x) - od.x;
  const RationalVector d2 = second->apply(od.x) - od.x;
  return !d1.is_zero() && d2 == d1 * (-od.alpha) && is_extreme_vertex(base.P, *idx);
}

bool ProperCone::contains(const RationalMatrix& S) const {
  if (S.rows() != dim || S.cols() != dim) return false;
  for (std::size_t i = 0; i < num_generators; ++i) {
    for (std::size_t j = 0; j < num_vertices; ++j) {
      if (!P.contains(P.vertex(j) + S * displacements[i * num_vertices + j])) return false;
    }
  }
  return true;
}

ProperCone proper_cone_lp(const LinearizedInstance& inst) {
  const RegretInstance& base = inst.base;
  ProperCone cone;
  cone.dim = base.dim();
  cone.num_vertices = base.P.num_vertices();
  cone.num_generators = base.Phi.size();
  cone.P = base.P;
  const std::size_t d = cone.dim;
  const std::size_t n = cone.num_vertices;
  const std::size_t s_vars = d * d;
  const std::size_t vars = s_vars + cone.num_generators * n * n;
  cone.program = LinearProgram(vars);
  for (std::size_t i = 0; i < cone.num_generators; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const RationalVector& pj = base.P.vertex(j);
      RationalVector w = base.Phi[i].apply(pj) - pj;
      const std::size_t lambda0 = s_vars + (i * n + j) * n;
      for (std::size_t r = 0; r < d; ++r) {
        // sum_c S_rc w_c - sum_k lambda_k p_k[r] = -p_j[r]
        RationalVector row(vars);
        for (std::size_t c = 0; c < d; ++c) row[r * d + c] = w[c];
        for (std::size_t k = 0; k < n; ++k) row[lambda0 + k] = -base.P.vertex(k)[r];
        cone.program.add_equality(std::move(row), -pj[r]);
      }
      RationalVector sum(vars);
      for (std::size_t k = 0; k < n; ++k) sum[lambda0 + k] = 1;
      cone.program.add_equality(std::move(sum), 1);
      for (std::size_t k = 0; k < n; ++k) cone.program.add_nonnegative(lambda0 + k);
      cone.displacements.push_back(std::move(w));
    }
  }
  return cone;
}

std::vector<RationalMatrix> cone_span_basis(const ProperCone& cone) {
  const std::size_t d = cone.dim;
  const std::size_t s_vars = d * d;
  LinearProgram bounded = cone.program;
  for (std::size_t v = 0; v < s_vars; ++v) bounded.add_bounds(v, -1, 1);

  std::vector<RationalMatrix> basis;
  std::vector<RationalVector> flats;
  for (;;) {
    std::vector<RationalVector> complement;
    if (flats.empty()) {
      for (std::size_t v = 0; v < s_vars; ++v) complement.push_back(RationalVector::unit(s_vars, v));
    } else {
      complement = right_kernel_basis(RationalMatrix::from_rows(flats));
    }
    bool grew = false;
    for (const auto& direction : complement) {
      for (int sign : {1, -1}) {
        LinearProgram lp = bounded;
        for (std::size_t v = 0; v < s_vars; ++v) lp.objective[v] = direction[v] * Rational(sign);
        const LpOutcome outcome = lp_solve(lp);
        const auto* opt = as_optimal(outcome);
        if (opt == nullptr || opt->value.sign() <= 0) continue;
        RationalVector flat = opt->x.head(s_vars);
        basis.push_back(RationalMatrix::unflatten(flat, d, d));
        flats.push_back(std::move(flat));
        grew = true;
        break;
      }
      if (grew) break;
    }
    if (!grew) return basis;
  }
}

EquivalenceVerdict decide_proper(const LinearizedInstance& inst, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw PreconditionError("decide_proper: trials must be at least 1");
  const RegretInstance& base = inst.base;
  require_valid(base);
  EquivalenceVerdict verdict;
  verdict.trials = trials;

  if (affine_span(base.P).directions.size() < base.dim() && !shared_left_kernel(inst)) {
    verdict.status = VerdictStatus::Obstructed;
    verdict.obstruction = LeftKernelEmpty{rank(stacked_displacements(base)), base.dim()};
    return verdict;
  }
  if (auto od = opposed_displacement(inst)) {
    verdict.status = VerdictStatus::Obstructed;
    verdict.obstruction = std::move(*od);
    return verdict;
  }

  const ProperCone cone = proper_cone_lp(inst);
  const std::vector<RationalMatrix> basis = cone_span_basis(cone);
  verdict.span_dim = basis.size();
  verdict.status = VerdictStatus::NoInvertibleFound;
  if (basis.empty()) {
    verdict.failure_bound = 0.0;
    return verdict;
  }
  const auto K = static_cast<std::uint64_t>(2 * basis.size() * trials);
  verdict.coefficient_range = static_cast<std::int64_t>(K);
  const double per_trial = std::min(1.0, static_cast<double>(base.dim()) / static_cast<double>(K));
  verdict.failure_bound = std::pow(per_trial, static_cast<double>(trials));

  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng = seeded_engine(seed, t);
    RationalMatrix S(base.dim(), base.dim());
    Rational total;
    for (const auto& B : basis) {
      const Rational c(static_cast<std::int64_t>(1 + uniform_index(rng, K)));
      S += B * c;
      total += c;
    }
    S *= total.reciprocal();
    if (det_exact(S).is_zero()) continue;
    if (!cone.contains(S)) throw std::logic_error("decide_proper: combination left the cone");
    RegretInstance target = apply_S(inst, S);
    const InstanceClass kind = classify(target).kind;
    if (kind != InstanceClass::Proper && kind != InstanceClass::External) {
      throw std::logic_error("decide_proper: transformed instance is not proper");
    }
    verdict.status = VerdictStatus::ProperEquivalent;
    verdict.S = std::move(S);
    verdict.target = std::move(target);
    verdict.trials = t + 1;
    return verdict;
  }
  return verdict;
}

}  // namespace approachlab
