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

#include "approachlab/instances.hpp"

#include <algorithm>
#include <string>

#include "approachlab/error.hpp"
#include "approachlab/lp.hpp"

namespace approachlab {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw DimensionError(message);
}

Rational max_of(const std::vector<Rational>& values) {
  if (values.empty()) return Rational();
  return *std::max_element(values.begin(), values.end());
}

void check_lengths(const std::vector<RationalVector>& plays, const std::vector<RationalVector>& losses) {
  if (plays.size() != losses.size()) {
    throw DimensionError("play and loss sequences differ in length: " + std::to_string(plays.size()) + " vs " +
                         std::to_string(losses.size()));
  }
}

}  // namespace

AffineMapGen AffineMapGen::identity(std::size_t d, std::string label) {
  return {RationalMatrix::identity(d), RationalVector(d), std::move(label)};
}

AffineMapGen AffineMapGen::constant(const RationalVector& value, std::string label) {
  return {RationalMatrix(value.size(), value.size()), value, std::move(label)};
}

RationalVector AffineMapGen::apply(const RationalVector& p) const { return linear * p + offset; }

RationalMatrix AffineMapGen::displacement_matrix() const {
  return RationalMatrix::identity(dim()) - linear;
}

RationalVector AffineMapGen::displacement(const RationalVector& p) const { return p - apply(p); }

void RegretInstance::validate() const {
  const std::size_t d = P.ambient_dim();
  require(L.ambient_dim() == d, "regret instance: L has dimension " + std::to_string(L.ambient_dim()) +
                                    ", P has " + std::to_string(d));
  if (Phi.empty()) throw PreconditionError("regret instance needs at least one generator");
  for (const auto& g : Phi) {
    require(g.linear.rows() == d && g.linear.cols() == d && g.offset.size() == d,
            "generator '" + g.label + "' does not act on dimension " + std::to_string(d));
  }
}

Rational BilinearGen::evaluate(const RationalVector& p, const RationalVector& l) const {
  return dot(slope_at(p), l) + intercept_at(p);
}

RationalVector BilinearGen::slope_at(const RationalVector& p) const {
  if (p.size() != M.rows()) throw DimensionError("bilinear generator: play has the wrong length");
  RationalVector out = p_offset;
  for (std::size_t r = 0; r < M.rows(); ++r) {
    if (p[r].is_zero()) continue;
    for (std::size_t c = 0; c < M.cols(); ++c) {
      if (!M(r, c).is_zero()) out[c] += p[r] * M(r, c);
    }
  }
  return out;
}

Rational BilinearGen::intercept_at(const RationalVector& p) const { return dot(l_offset, p) + c; }

bool BilinearGen::is_zero() const { return M.is_zero() && p_offset.is_zero() && l_offset.is_zero() && c.is_zero(); }

void ApproachabilityInstance::validate() const {
  const std::size_t dp = P.ambient_dim();
  const std::size_t dl = L.ambient_dim();
  if (U.empty()) throw PreconditionError("approachability instance needs at least one generator");
  for (const auto& u : U) {
    require(u.M.rows() == dp && u.M.cols() == dl && u.p_offset.size() == dl && u.l_offset.size() == dp,
            "generator '" + u.label + "' does not match dimensions " + std::to_string(dp) + " x " +
                std::to_string(dl));
  }
}

std::string to_string(InstanceClass kind) {
  switch (kind) {
    case InstanceClass::External:
      return "External";
    case InstanceClass::Proper:
      return "Proper";
    case InstanceClass::ImproperValid:
      return "ImproperValid";
    case InstanceClass::Invalid:
      return "Invalid";
  }
  return "Invalid";
}

std::optional<RationalVector> find_fixed_point(const AffineMapGen& phi, const Polytope& P) {
  require(phi.dim() == P.ambient_dim(), "find_fixed_point: generator and polytope dimensions differ");
  for (const auto& v : P.vertices()) {
    if (phi.apply(v) == v) return v;
  }
  // sum_j lambda_j (A v_j - v_j) = -b over convex lambda.
  const std::size_t n = P.num_vertices();
  const std::size_t d = P.ambient_dim();
  std::vector<RationalVector> moved;
  moved.reserve(n);
  for (const auto& v : P.vertices()) moved.push_back(phi.linear * v - v);
  LinearProgram lp(n);
  for (std::size_t k = 0; k < d; ++k) {
    RationalVector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = moved[j][k];
    lp.add_equality(std::move(row), -phi.offset[k]);
  }
  lp.add_equality(RationalVector::constant(n, 1), 1);
  for (std::size_t j = 0; j < n; ++j) lp.add_nonnegative(j);
  const LpOutcome outcome = lp_solve(lp);
  const auto* opt = as_optimal(outcome);
  if (opt == nullptr) return std::nullopt;
  RationalVector p(d);
  for (std::size_t j = 0; j < n; ++j) {
    if (!opt->x[j].is_zero()) p += P.vertex(j) * opt->x[j];
  }
  return p;
}

std::optional<RationalVector> separating_direction(const AffineMapGen& phi, const Polytope& P) {
  require(phi.dim() == P.ambient_dim(), "separating_direction: generator and polytope dimensions differ");
  const std::size_t d = P.ambient_dim();
  // Variables (w_1..w_d, t): maximize t with t <= <v - phi(v), w> per vertex.
  LinearProgram lp(d + 1);
  lp.objective[d] = 1;
  for (const auto& v : P.vertices()) {
    const RationalVector disp = phi.displacement(v);
    RationalVector row(d + 1);
    for (std::size_t k = 0; k < d; ++k) row[k] = -disp[k];
    row[d] = 1;
    lp.add_inequality(std::move(row), 0);
  }
  for (std::size_t k = 0; k < d; ++k) lp.add_bounds(k, -1, 1);
  const LpOutcome outcome = lp_solve(lp);
  const auto* opt = as_optimal(outcome);
  if (opt == nullptr || opt->value.sign() <= 0) return std::nullopt;
  return opt->x.head(d);
}

Classification classify(const RegretInstance& inst) {
  inst.validate();
  Classification out;
  for (const auto& g : inst.Phi) {
    auto fp = find_fixed_point(g, inst.P);
    if (!fp) {
      out.kind = InstanceClass::Invalid;
      out.fixed_points.clear();
      out.witness = InvalidWitness{g.label, *separating_direction(g, inst.P)};
      return out;
    }
    out.fixed_points.emplace_back(g.label, std::move(*fp));
  }
  const AffineSpan span = affine_span(inst.P);
  bool external = true;
  for (const auto& g : inst.Phi) {
    for (const auto& dir : span.directions) {
      if (!(g.linear * dir).is_zero()) external = false;
    }
  }
  if (external) {
    out.kind = InstanceClass::External;
    return out;
  }
  for (const auto& g : inst.Phi) {
    for (const auto& v : inst.P.vertices()) {
      if (!inst.P.contains(g.apply(v))) {
        out.kind = InstanceClass::ImproperValid;
        return out;
      }
    }
  }
  out.kind = InstanceClass::Proper;
  return out;
}

std::vector<Rational> generator_regrets(const RegretInstance& inst, const std::vector<RationalVector>& plays,
                                        const std::vector<RationalVector>& losses) {
  check_lengths(plays, losses);
  std::vector<Rational> sums(inst.Phi.size());
  for (std::size_t t = 0; t < plays.size(); ++t) {
    for (std::size_t k = 0; k < inst.Phi.size(); ++k) sums[k] += dot(inst.Phi[k].displacement(plays[t]), losses[t]);
  }
  return sums;
}

std::vector<Rational> generator_payoffs(const ApproachabilityInstance& inst, const std::vector<RationalVector>& plays,
                                        const std::vector<RationalVector>& losses) {
  check_lengths(plays, losses);
  std::vector<Rational> sums(inst.U.size());
  for (std::size_t t = 0; t < plays.size(); ++t) {
    for (std::size_t k = 0; k < inst.U.size(); ++k) sums[k] += inst.U[k].evaluate(plays[t], losses[t]);
  }
  return sums;
}

void check_sequence(const Polytope& P, const Polytope& L, const std::vector<RationalVector>& plays,
                    const std::vector<RationalVector>& losses) {
  check_lengths(plays, losses);
  for (std::size_t t = 0; t < plays.size(); ++t) {
    if (plays[t].size() != P.ambient_dim() || !P.contains(plays[t])) {
      throw InvalidPlayError("round " + std::to_string(t) + ": play " + plays[t].str() + " is not in P");
    }
    if (losses[t].size() != L.ambient_dim() || !L.contains(losses[t])) {
      throw InvalidPlayError("round " + std::to_string(t) + ": loss " + losses[t].str() + " is not in L");
    }
  }
}

Rational regret_of_play(const RegretInstance& inst, const std::vector<RationalVector>& plays,
                        const std::vector<RationalVector>& losses) {
  inst.validate();
  check_sequence(inst.P, inst.L, plays, losses);
  if (plays.empty()) return Rational();
  return max_of(generator_regrets(inst, plays, losses));
}

Rational apploss_of_play(const ApproachabilityInstance& inst, const std::vector<RationalVector>& plays,
                         const std::vector<RationalVector>& losses) {
  inst.validate();
  check_sequence(inst.P, inst.L, plays, losses);
  if (plays.empty()) return Rational();
  return max_of(generator_payoffs(inst, plays, losses));
}

Rational weighted_regret(const RegretInstance& inst, const std::vector<Rational>& weights,
                         const std::vector<RationalVector>& plays, const std::vector<RationalVector>& losses) {
  if (weights.size() != inst.Phi.size()) {
    throw DimensionError("weighted_regret: " + std::to_string(weights.size()) + " weights for " +
                         std::to_string(inst.Phi.size()) + " generators");
  }
  for (const auto& w : weights) {
    if (w.sign() <= 0) throw PreconditionError("weighted_regret: weights must be positive, got " + w.str());
  }
  const Classification cls = classify(inst);
  if (cls.kind != InstanceClass::Proper && cls.kind != InstanceClass::External) {
    throw PreconditionError("weighted_regret: instance '" + inst.name + "' is " + to_string(cls.kind) +
                            ", expected Proper");
  }
  check_sequence(inst.P, inst.L, plays, losses);
  if (plays.empty()) return Rational();
  std::vector<Rational> sums = generator_regrets(inst, plays, losses);
  for (std::size_t i = 0; i < sums.size(); ++i) sums[i] *= weights[i];
  return max_of(sums);
}

ApproachabilityInstance regret_as_approachability(const RegretInstance& inst) {
  inst.validate();
  const std::size_t d = inst.dim();
  std::vector<BilinearGen> gens;
  for (const auto& g : inst.Phi) {
    gens.push_back({g.displacement_matrix().transpose(), -g.offset, RationalVector(d), Rational(), g.label});
  }
  return {inst.name, inst.P, inst.L, std::move(gens)};
}

}  // namespace approachlab
