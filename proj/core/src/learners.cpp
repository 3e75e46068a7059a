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

#include "approachlab/learners.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "approachlab/error.hpp"
#include "approachlab/random.hpp"

namespace approachlab {
namespace {

constexpr std::int64_t kSnapDenominator = std::int64_t{1} << 48;

std::vector<double> to_doubles(const std::vector<Rational>& values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.to_double());
  return out;
}

RationalVector mix_vertices(const Polytope& P, const std::vector<Rational>& weights) {
  if (P.is_standard_simplex()) return RationalVector(weights);
  RationalVector out(P.ambient_dim());
  for (std::size_t v = 0; v < weights.size(); ++v) {
    if (!weights[v].is_zero()) out += P.vertex(v) * weights[v];
  }
  return out;
}

class HedgeLearner final : public Learner {
 public:
  HedgeLearner(const RegretInstance& inst, std::int64_t horizon)
      : P_(inst.P), hedge_(inst.P.num_vertices(), horizon) {}

  std::string describe() const override { return "hedge"; }

  RationalVector next_play() override { return mix_vertices(P_, hedge_.distribution()); }

  void observe(const RationalVector& loss) override {
    std::vector<double> costs;
    costs.reserve(P_.num_vertices());
    for (const auto& v : P_.vertices()) costs.push_back(dot(v, loss).to_double());
    hedge_.update(costs);
  }

 private:
  Polytope P_;
  Hedge hedge_;
};

class GgmLearner final : public Learner {
 public:
  GgmLearner(const RegretInstance& inst, std::int64_t horizon)
      : inst_(inst), hedge_(inst.Phi.size(), horizon), inner_(inst.Phi.size()) {}

  std::string describe() const override { return "ggm"; }

  RationalVector next_play() override {
    weights_ = hedge_.distribution();
    const std::size_t d = inst_.dim();
    AffineMapGen mixed{RationalMatrix(d, d), RationalVector(d), "mixed"};
    for (std::size_t j = 0; j < weights_.size(); ++j) {
      if (weights_[j].is_zero()) continue;
      if (!inst_.Phi[j].linear.is_zero()) mixed.linear += inst_.Phi[j].linear * weights_[j];
      mixed.offset += inst_.Phi[j].offset * weights_[j];
    }
    if (mixed.linear.is_zero()) {
      play_ = mixed.offset;
    } else {
      auto fixed = find_fixed_point(mixed, inst_.P);
      if (!fixed) throw std::logic_error("ggm: mixture of self-maps has no fixed point");
      play_ = std::move(*fixed);
    }
    return play_;
  }

  void observe(const RationalVector& loss) override {
    std::vector<Rational> costs;
    costs.reserve(inst_.Phi.size());
    for (const auto& g : inst_.Phi) costs.push_back(dot(g.apply(play_), loss));
    inner_.add(weights_, costs);
    hedge_.update(to_doubles(costs));
  }

  std::optional<Rational> inner_regret() const override { return inner_.value(); }

 private:
  RegretInstance inst_;
  Hedge hedge_;
  InnerRegret inner_;
  std::vector<Rational> weights_;
  RationalVector play_;
};

class BlackwellLearner final : public Learner {
 public:
  BlackwellLearner(ClassicalReduction reduction, std::int64_t horizon)
      : reduction_(std::move(reduction)),
        hedge_(reduction_.source.U.size(), horizon),
        inner_(reduction_.source.U.size()) {}

  std::string describe() const override { return "blackwell"; }

  RationalVector next_play() override {
    weights_ = hedge_.distribution();
    play_ = reduction_.action(RationalVector(weights_));
    return play_;
  }

  void observe(const RationalVector& loss) override {
    const RationalVector inner_loss = reduction_.target_loss(play_, loss);
    std::vector<Rational> costs(inner_loss.begin(), inner_loss.end());
    inner_.add(weights_, costs);
    hedge_.update(to_doubles(costs));
  }

  std::optional<Rational> inner_regret() const override { return inner_.value(); }

 private:
  ClassicalReduction reduction_;
  Hedge hedge_;
  InnerRegret inner_;
  std::vector<Rational> weights_;
  RationalVector play_;
};

class StaticLearner final : public Learner {
 public:
  explicit StaticLearner(RationalVector point) : point_(std::move(point)) {}
  std::string describe() const override { return "static:" + point_.str(); }
  RationalVector next_play() override { return point_; }
  void observe(const RationalVector&) override {}

 private:
  RationalVector point_;
};

class IidAdversary final : public Adversary {
 public:
  IidAdversary(std::vector<RationalVector> candidates, std::uint64_t seed, std::string description)
      : candidates_(std::move(candidates)), rng_(seed), description_(std::move(description)) {
    if (candidates_.empty()) throw PreconditionError("iid adversary needs at least one loss");
  }

  std::string describe() const override { return description_; }

  RationalVector next_loss(const RationalVector&) override {
    return candidates_[uniform_index(rng_, candidates_.size())];
  }

 private:
  std::vector<RationalVector> candidates_;
  std::mt19937_64 rng_;
  std::string description_;
};

class BestResponseAdversary final : public Adversary {
 public:
  explicit BestResponseAdversary(const Objective& objective)
      : objective_(objective), cumulative_(objective.num_generators()) {
    const Polytope& L = objective_.L();
    const auto& box = L.box();
    const std::size_t d = L.ambient_dim();
    counting_box_ = box.has_value() && d < 63 && L.num_vertices() == (std::size_t{1} << d);
    for (std::size_t c = 0; counting_box_ && c < d; ++c) counting_box_ = box->first[c] < box->second[c];
    for (std::size_t i = 0; counting_box_ && i < L.num_vertices(); ++i) {
      for (std::size_t c = 0; c < d; ++c) {
        const Rational& want = ((i >> c) & 1U) != 0 ? box->second[c] : box->first[c];
        if (L.vertex(i)[c] != want) {
          counting_box_ = false;
          break;
        }
      }
    }
  }

  std::string describe() const override { return "best-response"; }

  RationalVector next_loss(const RationalVector& play) override {
    const Polytope& L = objective_.L();
    const Rational top = *std::max_element(cumulative_.begin(), cumulative_.end());
    std::optional<Rational> best;
    std::size_t best_vertex = 0;
    for (std::size_t j = 0; j < cumulative_.size(); ++j) {
      if (cumulative_[j] != top) continue;
      const RationalVector slope = objective_.slope(j, play);
      const Rational intercept = objective_.intercept(j, play);
      if (counting_box_) {
        std::size_t index = 0;
        for (std::size_t c = 0; c < slope.size(); ++c) {
          if (slope[c].sign() > 0) index |= std::size_t{1} << c;
        }
        const Rational value = dot(slope, L.vertex(index)) + intercept;
        if (!best || value > *best) {
          best = value;
          best_vertex = index;
        }
        continue;
      }
      for (std::size_t w = 0; w < L.num_vertices(); ++w) {
        const Rational value = dot(slope, L.vertex(w)) + intercept;
        if (!best || value > *best) {
          best = value;
          best_vertex = w;
        }
      }
    }
    const RationalVector& loss = L.vertex(best_vertex);
    for (std::size_t j = 0; j < cumulative_.size(); ++j) cumulative_[j] += objective_.value(j, play, loss);
    return loss;
  }

 private:
  Objective objective_;
  std::vector<Rational> cumulative_;
  bool counting_box_ = false;
};

class ReplayAdversary final : public Adversary {
 public:
  explicit ReplayAdversary(std::vector<RationalVector> losses) : losses_(std::move(losses)) {}
  std::string describe() const override { return "replay"; }
  RationalVector next_loss(const RationalVector&) override {
    if (next_ >= losses_.size()) {
      throw PreconditionError("replay adversary ran out of losses after " + std::to_string(losses_.size()) +
                              " rounds");
    }
    return losses_[next_++];
  }

 private:
  std::vector<RationalVector> losses_;
  std::size_t next_ = 0;
};

}  // namespace

Objective::Objective(AnyInstance inst) : inst_(std::move(inst)) {
  if (const auto* r = std::get_if<RegretInstance>(&inst_)) {
    r->validate();
    for (const auto& g : r->Phi) constant_.push_back(g.linear.is_zero());
  } else {
    std::get<ApproachabilityInstance>(inst_).validate();
  }
}

const std::string& Objective::name() const {
  return std::visit([](const auto& i) -> const std::string& { return i.name; }, inst_);
}

const Polytope& Objective::P() const {
  return std::visit([](const auto& i) -> const Polytope& { return i.P; }, inst_);
}

const Polytope& Objective::L() const {
  return std::visit([](const auto& i) -> const Polytope& { return i.L; }, inst_);
}

std::size_t Objective::num_generators() const {
  if (const auto* r = std::get_if<RegretInstance>(&inst_)) return r->Phi.size();
  return std::get<ApproachabilityInstance>(inst_).U.size();
}

const std::string& Objective::label(std::size_t j) const {
  if (const auto* r = std::get_if<RegretInstance>(&inst_)) return r->Phi[j].label;
  return std::get<ApproachabilityInstance>(inst_).U[j].label;
}

RationalVector Objective::slope(std::size_t j, const RationalVector& p) const {
  if (const auto* r = std::get_if<RegretInstance>(&inst_)) {
    if (constant_[j]) return p - r->Phi[j].offset;
    return r->Phi[j].displacement(p);
  }
  return std::get<ApproachabilityInstance>(inst_).U[j].slope_at(p);
}

Rational Objective::intercept(std::size_t j, const RationalVector& p) const {
  if (is_regret()) return Rational();
  return std::get<ApproachabilityInstance>(inst_).U[j].intercept_at(p);
}

Rational Objective::value(std::size_t j, const RationalVector& p, const RationalVector& l) const {
  if (const auto* r = std::get_if<RegretInstance>(&inst_)) {
    if (constant_[j]) return dot(p, l) - dot(r->Phi[j].offset, l);
    return dot(r->Phi[j].displacement(p), l);
  }
  return std::get<ApproachabilityInstance>(inst_).U[j].evaluate(p, l);
}

Hedge::Hedge(std::size_t experts, std::int64_t horizon) : cumulative_(experts, 0.0) {
  if (experts == 0) throw PreconditionError("hedge needs at least one expert");
  if (horizon <= 0) throw PreconditionError("hedge needs a positive horizon");
  eta_ = std::sqrt(8.0 * std::log(static_cast<double>(experts)) / static_cast<double>(horizon));
}

std::vector<Rational> Hedge::distribution() const {
  const double low = *std::min_element(cumulative_.begin(), cumulative_.end());
  std::vector<double> w(cumulative_.size());
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(-eta_ * (cumulative_[i] - low));
    total += w[i];
  }
  std::vector<std::int64_t> ticks(w.size());
  std::int64_t used = 0;
  std::size_t heaviest = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    ticks[i] = static_cast<std::int64_t>(std::floor(w[i] / total * static_cast<double>(kSnapDenominator)));
    ticks[i] = std::clamp<std::int64_t>(ticks[i], 0, kSnapDenominator);
    used += ticks[i];
    if (w[i] > w[heaviest]) heaviest = i;
  }
  ticks[heaviest] += kSnapDenominator - used;
  if (ticks[heaviest] < 0) throw std::logic_error("hedge: snapping overflowed");
  std::vector<Rational> out;
  out.reserve(w.size());
  for (auto t : ticks) out.emplace_back(t, kSnapDenominator);
  return out;
}

void Hedge::update(const std::vector<double>& losses) {
  if (losses.size() != cumulative_.size()) throw DimensionError("hedge: loss length mismatch");
  for (std::size_t i = 0; i < losses.size(); ++i) cumulative_[i] += losses[i];
}

void InnerRegret::add(const std::vector<Rational>& weights, const std::vector<Rational>& costs) {
  for (std::size_t j = 0; j < costs.size(); ++j) {
    if (!weights[j].is_zero()) played_ += weights[j] * costs[j];
    totals_[j] += costs[j];
  }
}

Rational InnerRegret::value() const { return played_ - *std::min_element(totals_.begin(), totals_.end()); }

std::unique_ptr<Learner> make_hedge_learner(const RegretInstance& inst, std::int64_t horizon) {
  return std::make_unique<HedgeLearner>(inst, horizon);
}

std::unique_ptr<Learner> make_ggm_learner(const RegretInstance& inst, std::int64_t horizon) {
  const InstanceClass kind = classify(inst).kind;
  if (kind != InstanceClass::Proper && kind != InstanceClass::External) {
    throw PreconditionError("ggm learner needs a proper instance; '" + inst.name + "' is " + to_string(kind));
  }
  return std::make_unique<GgmLearner>(inst, horizon);
}

std::unique_ptr<Learner> make_blackwell_learner(const AnyInstance& inst, std::int64_t horizon) {
  if (const auto* r = std::get_if<RegretInstance>(&inst)) {
    return std::make_unique<BlackwellLearner>(classical_reduce(regret_as_approachability(*r)), horizon);
  }
  return std::make_unique<BlackwellLearner>(classical_reduce(std::get<ApproachabilityInstance>(inst)), horizon);
}

std::unique_ptr<Learner> make_static_learner(const Polytope& P, RationalVector point) {
  if (point.size() != P.ambient_dim()) throw DimensionError("static play has the wrong length");
  if (!P.contains(point)) throw InvalidPlayError("static play " + point.str() + " is not in P");
  return std::make_unique<StaticLearner>(std::move(point));
}

std::unique_ptr<Adversary> make_iid_adversary(const Polytope& L, std::uint64_t seed) {
  return std::make_unique<IidAdversary>(L.vertices(), seed, "iid:" + std::to_string(seed));
}

std::unique_ptr<Adversary> make_iid_choice_adversary(std::vector<RationalVector> candidates, std::uint64_t seed,
                                                     std::string description) {
  return std::make_unique<IidAdversary>(std::move(candidates), seed, std::move(description));
}

std::unique_ptr<Adversary> make_best_response_adversary(const Objective& objective) {
  return std::make_unique<BestResponseAdversary>(objective);
}

std::unique_ptr<Adversary> make_replay_adversary(std::vector<RationalVector> losses) {
  return std::make_unique<ReplayAdversary>(std::move(losses));
}

std::vector<RationalVector> restricted_losses(const ClassicalReduction& reduction, const RationalVector& mix,
                                              const std::vector<std::size_t>& zero_coords) {
  const Polytope& L = reduction.source.L;
  if (!reduction.source.P.contains(mix)) throw InvalidPlayError("restricted mix " + mix.str() + " is not in P");
  std::set<RationalVector> seen;
  std::vector<RationalVector> out;
  for (const auto& w : L.vertices()) {
    bool keep = true;
    for (auto z : zero_coords) {
      if (z >= w.size()) throw DimensionError("restricted coordinate " + std::to_string(z) + " out of range");
      keep = keep && w[z].is_zero();
    }
    if (!keep || !seen.insert(w).second) continue;
    out.push_back(reduction.target_loss(mix, w));
  }
  if (out.empty()) throw PreconditionError("no vertex of L satisfies the restriction");
  return out;
}

}  // namespace approachlab
