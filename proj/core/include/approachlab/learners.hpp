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

#ifndef APPROACHLAB_LEARNERS_HPP_
#define APPROACHLAB_LEARNERS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "approachlab/instances.hpp"
#include "approachlab/reductions.hpp"

namespace approachlab {

// Generator values of a regret or approachability instance, both viewed as
// affine functions of the loss for a fixed play.
class Objective {
 public:
  explicit Objective(AnyInstance inst);

  const AnyInstance& instance() const { return inst_; }
  bool is_regret() const { return std::holds_alternative<RegretInstance>(inst_); }
  const std::string& name() const;
  const Polytope& P() const;
  const Polytope& L() const;
  std::size_t num_generators() const;
  const std::string& label(std::size_t j) const;

  // g_j(p, .) = <slope, .> + intercept
  RationalVector slope(std::size_t j, const RationalVector& p) const;
  Rational intercept(std::size_t j, const RationalVector& p) const;
  Rational value(std::size_t j, const RationalVector& p, const RationalVector& l) const;

 private:
  AnyInstance inst_;
  std::vector<bool> constant_;
};

// Multiplicative weights with a fixed learning rate sqrt(8 ln N / T).
// Distributions are snapped to multiples of 2^-48; the rounding remainder
// goes to the heaviest coordinate, so every play is an exact distribution.
class Hedge {
 public:
  Hedge(std::size_t experts, std::int64_t horizon);

  std::size_t experts() const { return cumulative_.size(); }
  double eta() const { return eta_; }
  std::vector<Rational> distribution() const;
  void update(const std::vector<double>& losses);

 private:
  std::vector<double> cumulative_;
  double eta_ = 0.0;
};

class Learner {
 public:
  virtual ~Learner() = default;
  virtual std::string describe() const = 0;
  virtual RationalVector next_play() = 0;
  // Loss for the play most recently returned by next_play.
  virtual void observe(const RationalVector& loss) = 0;
  // Cumulative regret of the inner experts learner, for learners built on one.
  virtual std::optional<Rational> inner_regret() const { return std::nullopt; }
};

// Exact external regret bookkeeping for an inner experts learner.
class InnerRegret {
 public:
  explicit InnerRegret(std::size_t experts) : totals_(experts) {}
  void add(const std::vector<Rational>& weights, const std::vector<Rational>& costs);
  Rational value() const;

 private:
  Rational played_;
  std::vector<Rational> totals_;
};

// Hedge over the vertices of P; expert v suffers <v, l>.
std::unique_ptr<Learner> make_hedge_learner(const RegretInstance& inst, std::int64_t horizon);

// Inner Hedge over the generators; plays a fixed point of the mixed map.
// Throws PreconditionError unless the instance is Proper or External.
std::unique_ptr<Learner> make_ggm_learner(const RegretInstance& inst, std::int64_t horizon);

// Hedge on the classical reduction target, mapped back through the halfspace
// action. Regret instances go through regret_as_approachability first.
std::unique_ptr<Learner> make_blackwell_learner(const AnyInstance& inst, std::int64_t horizon);

// Always plays the given point of P.
std::unique_ptr<Learner> make_static_learner(const Polytope& P, RationalVector point);

class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual std::string describe() const = 0;
  // Sees the current play; oblivious adversaries ignore it.
  virtual RationalVector next_loss(const RationalVector& play) = 0;
};

// Uniform draw from the vertices of L.
std::unique_ptr<Adversary> make_iid_adversary(const Polytope& L, std::uint64_t seed);

// Uniform draw from a fixed candidate list.
std::unique_ptr<Adversary> make_iid_choice_adversary(std::vector<RationalVector> candidates, std::uint64_t seed,
                                                     std::string description);

// Among the generators with the largest cumulative value, the (generator,
// L-vertex) pair with the largest instantaneous value; ties go to the lower
// index.
std::unique_ptr<Adversary> make_best_response_adversary(const Objective& objective);

// Plays the given losses in order; throws PreconditionError when exhausted.
std::unique_ptr<Adversary> make_replay_adversary(std::vector<RationalVector> losses);

// The restricted losses of the classical-reduction lower bound: source losses
// are the vertices of L with the listed coordinates pinned to zero, each
// paired with the fixed source play mix and passed through target_loss.
std::vector<RationalVector> restricted_losses(const ClassicalReduction& reduction, const RationalVector& mix,
                                              const std::vector<std::size_t>& zero_coords);

}  // namespace approachlab

#endif  // APPROACHLAB_LEARNERS_HPP_
