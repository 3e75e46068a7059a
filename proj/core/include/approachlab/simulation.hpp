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

#ifndef APPROACHLAB_SIMULATION_HPP_
#define APPROACHLAB_SIMULATION_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "approachlab/learners.hpp"

namespace approachlab {

struct Trace {
  std::string instance;
  std::string learner;
  std::string adversary;
  // "regret" or "apploss"
  std::string metric;
  std::int64_t horizon = 0;
  std::uint64_t seed = 0;
  std::vector<RationalVector> plays;
  std::vector<RationalVector> losses;
  // Max over generators of the prefix sums, one entry per round.
  std::vector<Rational> cumulative;
  // Inner learner's regret per round; empty when the learner has none.
  std::vector<Rational> inner_cumulative;

  Rational final_loss() const { return cumulative.empty() ? Rational() : cumulative.back(); }
  double final_loss_over_sqrt_t() const;
};

// Runs T rounds. Every play and loss is checked against P and L; a violation
// throws InvalidPlayError naming the round.
Trace simulate(Learner& learner, Adversary& adversary, const Objective& objective, std::int64_t horizon,
               std::uint64_t seed);

// Rationals as strings, floats for the summary only.
std::string trace_to_json(const Trace& trace);

struct AdversarySpec {
  // "iid", "best-response", "replay" or "restricted"
  std::string kind = "iid";
  // Overrides the run seed for iid kinds.
  std::optional<std::uint64_t> seed;
  std::vector<RationalVector> replay;
  // restricted: source play paired with each restricted source loss.
  RationalVector mix;
  std::vector<std::size_t> zero_coords;
};

// Parses "iid", "iid:<seed>", "best-response" or "replay". Replay losses are
// supplied separately.
AdversarySpec parse_adversary_spec(const std::string& text);

struct RunSetup {
  AnyInstance instance;
  // "none" or "classical"; with "classical" the run happens on the
  // reduction target.
  std::string reduction = "none";
  // "hedge", "ggm", "blackwell" or "static:<vertex index>"
  std::string learner = "hedge";
  AdversarySpec adversary;
};

Trace run(const RunSetup& setup, std::int64_t horizon, std::uint64_t seed);

struct SweepSetup {
  RunSetup run;
  std::vector<std::int64_t> horizons;
  std::vector<std::uint64_t> seeds;
};

struct SweepRow {
  std::int64_t horizon = 0;
  std::size_t runs = 0;
  double mean = 0.0;
  double max = 0.0;
  double min = 0.0;
};

// Empirical final_loss / sqrt(T) per horizon across seeds. Runs fan out over
// hardware threads; rows do not depend on scheduling.
std::vector<SweepRow> rate_sweep(const SweepSetup& setup);

// Header "T,runs,mean,max,min"; floats with 12 significant digits.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace approachlab

#endif  // APPROACHLAB_SIMULATION_HPP_
