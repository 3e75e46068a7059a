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

#include "approachlab/reductions.hpp"

#include <algorithm>

#include "approachlab/error.hpp"
#include "approachlab/lp.hpp"

namespace approachlab {
namespace {

// [M l_offset; p_offset^T c], so u(p, l) = p^T H l^ with hats appending 1.
RationalMatrix hat_matrix(const BilinearGen& u, bool augment) {
  const std::size_t dp = u.M.rows();
  const std::size_t dl = u.M.cols();
  if (!augment) return u.M;
  RationalMatrix H(dp + 1, dl + 1);
  for (std::size_t i = 0; i < dp; ++i) {
    for (std::size_t j = 0; j < dl; ++j) H(i, j) = u.M(i, j);
    H(i, dl) = u.l_offset[i];
  }
  for (std::size_t j = 0; j < dl; ++j) H(dp, j) = u.p_offset[j];
  H(dp, dl) = u.c;
  return H;
}

Polytope hatted(const Polytope& P) {
  std::vector<RationalVector> vs;
  vs.reserve(P.num_vertices());
  for (const auto& v : P.vertices()) vs.push_back(v.appended(1));
  return Polytope(std::move(vs));
}

void check_coeffs(const RationalVector& coeffs, std::size_t k) {
  if (coeffs.size() != k) {
    throw DimensionError("expected " + std::to_string(k) + " constraint coefficients, got " +
                         std::to_string(coeffs.size()));
  }
  for (const auto& c : coeffs) {
    if (c.sign() < 0) throw PreconditionError("constraint coefficients must be non-negative: " + coeffs.str());
  }
  if (!coeffs.sum().is_one()) throw PreconditionError("constraint coefficients must sum to 1: " + coeffs.str());
}

// table[j * per_vertex + w] holds (u_k(v_j, w))_k.
RationalVector action_from_table(const Polytope& P, const std::vector<RationalVector>& table,
                                 std::size_t per_vertex, const RationalVector& coeffs) {
  const std::size_t n = P.num_vertices();
  std::vector<std::vector<Rational>> mixed(n, std::vector<Rational>(per_vertex));
  for (std::size_t j = 0; j < n; ++j) {
    bool ok = true;
    for (std::size_t w = 0; w < per_vertex; ++w) {
      mixed[j][w] = dot(coeffs, table[j * per_vertex + w]);
      if (mixed[j][w].sign() > 0) ok = false;
    }
    if (ok) return P.vertex(j);
  }
  LinearProgram lp(n);
  for (std::size_t w = 0; w < per_vertex; ++w) {
    RationalVector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = mixed[j][w];
    lp.add_inequality(std::move(row), 0);
  }
  lp.add_equality(RationalVector::constant(n, 1), 1);
  for (std::size_t j = 0; j < n; ++j) lp.add_nonnegative(j);
  const LpOutcome outcome = lp_solve(lp);
  const auto* opt = as_optimal(outcome);
  if (opt == nullptr) {
    throw NotApproachableError("no action satisfies the constraint mix " + coeffs.str() +
                               " against every loss vertex; the instance is not approachable");
  }
  RationalVector p(P.ambient_dim());
  for (std::size_t j = 0; j < n; ++j) {
    if (!opt->x[j].is_zero()) p += P.vertex(j) * opt->x[j];
  }
  return p;
}

void require_weights(const RegretInstance& inst, const std::vector<Rational>& weights) {
  if (weights.size() != inst.Phi.size()) {
    throw DimensionError(std::to_string(weights.size()) + " weights for " + std::to_string(inst.Phi.size()) +
                         " generators");
  }
  for (const auto& w : weights) {
    if (w.sign() <= 0) throw PreconditionError("weights must be positive, got " + w.str());
  }
  const InstanceClass kind = classify(inst).kind;
  if (kind != InstanceClass::Proper && kind != InstanceClass::External) {
    throw PreconditionError("weighted rewrite needs a Proper instance; '" + inst.name + "' is " + to_string(kind));
  }
}

}  // namespace

RationalVector ClassicalReduction::target_loss(const RationalVector& p, const RationalVector& l) const {
  RationalVector out(source.U.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = -source.U[k].evaluate(p, l);
  return out;
}

RationalVector ClassicalReduction::action(const RationalVector& coeffs) const {
  check_coeffs(coeffs, source.U.size());
  std::vector<RationalVector> table;
  table.reserve(target.L.num_vertices());
  for (const auto& v : target.L.vertices()) table.push_back(-v);
  return action_from_table(source.P, table, source.L.num_vertices(), coeffs);
}

ClassicalReduction classical_reduce(const ApproachabilityInstance& inst) {
  inst.validate();
  const std::size_t k = inst.U.size();
  const std::size_t cols = (inst.P.ambient_dim() + 1) * (inst.L.ambient_dim() + 1);
  RationalMatrix G(k, cols);
  for (std::size_t r = 0; r < k; ++r) {
    const RationalVector flat = hat_matrix(inst.U[r], true).flatten();
    for (std::size_t c = 0; c < cols; ++c) G(r, c) = flat[c];
  }
  Polytope L_target = linear_image(G, tensor_product(hatted(inst.P), hatted(inst.L)).scaled(-1));
  std::vector<AffineMapGen> phi;
  for (std::size_t j = 0; j < k; ++j) phi.push_back(AffineMapGen::constant(RationalVector::unit(k, j), inst.U[j].label));
  RegretInstance target{inst.name + "-classical", Polytope::simplex(k), std::move(L_target), std::move(phi)};
  return {inst, std::move(target), std::move(G)};
}

RationalVector halfspace_action(const ApproachabilityInstance& inst, const RationalVector& coeffs) {
  inst.validate();
  check_coeffs(coeffs, inst.U.size());
  std::vector<RationalVector> table;
  for (const auto& v : inst.P.vertices()) {
    for (const auto& w : inst.L.vertices()) {
      RationalVector vals(inst.U.size());
      for (std::size_t k = 0; k < inst.U.size(); ++k) vals[k] = inst.U[k].evaluate(v, w);
      table.push_back(std::move(vals));
    }
  }
  return action_from_table(inst.P, table, inst.L.num_vertices(), coeffs);
}

RationalVector TightImproperReduction::map_play(const RationalVector& coeffs, const RationalVector& p) const {
  check_coeffs(coeffs, source.U.size());
  const RationalVector hat = augmented ? p.appended(1) : p;
  return RationalMatrix::outer(coeffs, hat).flatten();
}

RationalVector TightImproperReduction::map_play(const RationalVector& p) const {
  return map_play(RationalVector::unit(source.U.size(), 0), p);
}

RationalVector TightImproperReduction::map_loss(const RationalVector& l) const {
  return loss_matrix * (augmented ? l.appended(1) : l);
}

TightImproperReduction tight_improper_reduce(const ApproachabilityInstance& inst) {
  inst.validate();
  bool augment = false;
  for (const auto& u : inst.U) {
    if (!u.p_offset.is_zero() || !u.l_offset.is_zero() || !u.c.is_zero()) augment = true;
  }
  const std::size_t k = inst.U.size();
  const std::size_t dp = inst.P.ambient_dim() + (augment ? 1 : 0);
  const std::size_t dl = inst.L.ambient_dim() + (augment ? 1 : 0);
  const std::size_t dx = k * dp;

  RationalMatrix MB(dx, dl);
  for (std::size_t j = 0; j < k; ++j) {
    const RationalMatrix H = hat_matrix(inst.U[j], augment);
    for (std::size_t r = 0; r < dp; ++r) {
      for (std::size_t c = 0; c < dl; ++c) MB(j * dp + r, c) = -H(r, c);
    }
  }
  const Polytope P_hat = augment ? hatted(inst.P) : inst.P;
  const Polytope L_hat = augment ? hatted(inst.L) : inst.L;

  std::vector<AffineMapGen> phi;
  std::vector<std::pair<std::string, std::string>> bijection;
  for (std::size_t j = 0; j < k; ++j) {
    RationalMatrix lin = RationalMatrix::identity(dx);
    for (std::size_t block = 0; block < k; ++block) {
      for (std::size_t r = 0; r < dp; ++r) lin(j * dp + r, block * dp + r) += 1;
    }
    std::string label = "shift:" + inst.U[j].label;
    bijection.emplace_back(inst.U[j].label, label);
    phi.push_back({std::move(lin), RationalVector(dx), std::move(label)});
  }
  RegretInstance target{inst.name + "-tight-improper", tensor_product(Polytope::simplex(k), P_hat),
                        linear_image(MB, L_hat), std::move(phi)};
  return {inst, std::move(target), std::move(bijection), augment, std::move(MB)};
}

RegretInstance weighted_to_improper(const RegretInstance& inst, const std::vector<Rational>& weights) {
  require_weights(inst, weights);
  const RationalMatrix I = RationalMatrix::identity(inst.dim());
  RegretInstance out{inst.name + "-weighted-improper", inst.P, inst.L, {}};
  for (std::size_t i = 0; i < inst.Phi.size(); ++i) {
    const auto& g = inst.Phi[i];
    const Rational& w = weights[i];
    out.Phi.push_back({g.linear * w - I * (w - 1), g.offset * w, g.label});
  }
  return out;
}

WeightedProper weighted_to_proper(const RegretInstance& inst, const std::vector<Rational>& weights) {
  require_weights(inst, weights);
  const Rational W = *std::max_element(weights.begin(), weights.end());
  const RationalMatrix I = RationalMatrix::identity(inst.dim());
  RegretInstance out{inst.name + "-weighted-proper", inst.P, inst.L.scaled(W), {}};
  for (std::size_t i = 0; i < inst.Phi.size(); ++i) {
    const auto& g = inst.Phi[i];
    const Rational share = weights[i] / W;
    out.Phi.push_back({g.linear * share + I * (Rational(1) - share), g.offset * share, g.label});
  }
  return {std::move(out), W};
}

std::vector<BilinearGen> orthant_reduce(const std::vector<BilinearGen>& components, const Polytope& target,
                                        const Polytope& ball, const std::vector<RationalVector>& directions) {
  if (components.empty()) throw PreconditionError("orthant_reduce: no payoff components");
  if (directions.empty()) throw PreconditionError("orthant_reduce: no directions");
  const std::size_t m = components.size();
  if (target.ambient_dim() != m || ball.ambient_dim() != m) {
    throw DimensionError("orthant_reduce: target and ball must live in the payoff space of dimension " +
                         std::to_string(m));
  }
  const std::size_t dp = components.front().M.rows();
  const std::size_t dl = components.front().M.cols();
  std::vector<BilinearGen> out;
  for (const auto& v : directions) {
    if (v.size() != m) throw DimensionError("orthant_reduce: direction " + v.str() + " has the wrong length");
    const Rational a = target.support(v);
    const Rational b = ball.support(v);
    if (b.sign() <= 0) {
      throw PreconditionError("orthant_reduce: ball support " + b.str() + " in direction " + v.str() +
                              " is not positive");
    }
    BilinearGen u{RationalMatrix(dp, dl), RationalVector(dl), RationalVector(dp), -a / b, "v=" + v.str()};
    for (std::size_t i = 0; i < m; ++i) {
      if (v[i].is_zero()) continue;
      const Rational s = v[i] / b;
      const auto& comp = components[i];
      if (comp.M.rows() != dp || comp.M.cols() != dl) throw DimensionError("orthant_reduce: mixed component shapes");
      u.M += comp.M * s;
      u.p_offset += comp.p_offset * s;
      u.l_offset += comp.l_offset * s;
      u.c += comp.c * s;
    }
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace approachlab
