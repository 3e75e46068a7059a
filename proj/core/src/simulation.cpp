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

#include "approachlab/simulation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <atomic>
#include <future>
#include <set>
#include <thread>

#include "approachlab/error.hpp"
#include "json.hpp"

namespace approachlab {
namespace {

using Json = nlohmann::ordered_json;

Json vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) throw ParseError("malformed " + what + " '" + text + "'");
  return value;
}

std::unique_ptr<Learner> build_learner(const std::string& spec, const AnyInstance& inst, std::int64_t horizon) {
  const auto* regret = std::get_if<RegretInstance>(&inst);
  if (spec == "hedge") {
    if (regret == nullptr) throw PreconditionError("hedge learner needs a regret instance; use blackwell");
    return make_hedge_learner(*regret, horizon);
  }
  if (spec == "ggm") {
    if (regret == nullptr) throw PreconditionError("ggm learner needs a regret instance");
    return make_ggm_learner(*regret, horizon);
  }
  if (spec == "blackwell") return make_blackwell_learner(inst, horizon);
  if (spec.rfind("static:", 0) == 0) {
    const Polytope& P = std::visit([](const auto& i) -> const Polytope& { return i.P; }, inst);
    const std::string arg = spec.substr(7);
    if (arg.find(',') == std::string::npos) {
      const std::uint64_t index = parse_u64(arg, "vertex index");
      if (index >= P.num_vertices()) {
        throw PreconditionError("static vertex " + arg + " out of range; P has " +
                                std::to_string(P.num_vertices()) + " vertices");
      }
      return make_static_learner(P, P.vertex(index));
    }
    RationalVector point;
    std::size_t start = 0;
    for (;;) {
      const auto comma = arg.find(',', start);
      point.push_back(Rational::parse(arg.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return make_static_learner(P, std::move(point));
  }
  throw PreconditionError("unknown learner '" + spec + "'; expected hedge, ggm, blackwell or static:<vertex>");
}

std::unique_ptr<Adversary> build_adversary(const AdversarySpec& spec, const Objective& objective,
                                           const std::optional<ClassicalReduction>& reduction, std::uint64_t seed) {
  const std::uint64_t s = spec.seed.value_or(seed);
  if (spec.kind == "iid") return make_iid_adversary(objective.L(), s);
  if (spec.kind == "best-response") return make_best_response_adversary(objective);
  if (spec.kind == "replay") return make_replay_adversary(spec.replay);
  if (spec.kind == "restricted") {
    std::vector<RationalVector> candidates;
    if (reduction) {
      candidates = restricted_losses(*reduction, spec.mix, spec.zero_coords);
    } else {
      std::set<RationalVector> seen;
      for (const auto& w : objective.L().vertices()) {
        bool keep = true;
        for (auto z : spec.zero_coords) keep = keep && z < w.size() && w[z].is_zero();
        if (keep && seen.insert(w).second) candidates.push_back(w);
      }
    }
    return make_iid_choice_adversary(std::move(candidates), s, "restricted:" + std::to_string(s));
  }
  throw PreconditionError("unknown adversary '" + spec.kind + "'");
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

}  // namespace

double Trace::final_loss_over_sqrt_t() const {
  if (horizon <= 0) return 0.0;
  return final_loss().to_double() / std::sqrt(static_cast<double>(horizon));
}

Trace simulate(Learner& learner, Adversary& adversary, const Objective& objective, std::int64_t horizon,
               std::uint64_t seed) {
  if (horizon < 0) throw PreconditionError("horizon must be non-negative");
  Trace trace;
  trace.instance = objective.name();
  trace.learner = learner.describe();
  trace.adversary = adversary.describe();
  trace.metric = objective.is_regret() ? "regret" : "apploss";
  trace.horizon = horizon;
  trace.seed = seed;
  const auto rounds = static_cast<std::size_t>(horizon);
  trace.plays.reserve(rounds);
  trace.losses.reserve(rounds);
  trace.cumulative.reserve(rounds);

  std::vector<Rational> totals(objective.num_generators());
  std::set<RationalVector> checked_losses;
  for (std::size_t t = 0; t < rounds; ++t) {
    RationalVector play = learner.next_play();
    if (play.size() != objective.P().ambient_dim() || !objective.P().contains(play)) {
      throw InvalidPlayError("round " + std::to_string(t + 1) + ": play " + play.str() + " is not in P");
    }
    RationalVector loss = adversary.next_loss(play);
    if (!checked_losses.contains(loss)) {
      if (loss.size() != objective.L().ambient_dim() || !objective.L().contains(loss)) {
        throw InvalidPlayError("round " + std::to_string(t + 1) + ": loss " + loss.str() + " is not in L");
      }
      checked_losses.insert(loss);
    }
    learner.observe(loss);
    for (std::size_t j = 0; j < totals.size(); ++j) totals[j] += objective.value(j, play, loss);
    trace.cumulative.push_back(*std::max_element(totals.begin(), totals.end()));
    if (auto inner = learner.inner_regret()) trace.inner_cumulative.push_back(std::move(*inner));
    trace.plays.push_back(std::move(play));
    trace.losses.push_back(std::move(loss));
  }
  return trace;
}

std::string trace_to_json(const Trace& trace) {
  Json doc;
  doc["instance"] = trace.instance;
  doc["learner"] = trace.learner;
  doc["adversary"] = trace.adversary;
  doc["metric"] = trace.metric;
  doc["T"] = trace.horizon;
  doc["seed"] = trace.seed;
  Json plays = Json::array();
  for (const auto& p : trace.plays) plays.push_back(vector_json(p));
  doc["plays"] = std::move(plays);
  Json losses = Json::array();
  for (const auto& l : trace.losses) losses.push_back(vector_json(l));
  doc["losses"] = std::move(losses);
  Json cumulative = Json::array();
  for (const auto& c : trace.cumulative) cumulative.push_back(c.str());
  doc["cumulative"] = std::move(cumulative);
  if (!trace.inner_cumulative.empty()) {
    Json inner = Json::array();
    for (const auto& c : trace.inner_cumulative) inner.push_back(c.str());
    doc["inner_cumulative"] = std::move(inner);
  }
  doc["final_loss"] = trace.final_loss().str();
  doc["summary"] = {{"final_loss", trace.final_loss().to_double()},
                    {"final_loss_over_sqrtT", trace.final_loss_over_sqrt_t()}};
  return doc.dump(2) + "\n";
}

AdversarySpec parse_adversary_spec(const std::string& text) {
  AdversarySpec spec;
  if (text == "iid" || text == "best-response" || text == "replay") {
    spec.kind = text;
    return spec;
  }
  if (text.rfind("iid:", 0) == 0) {
    spec.kind = "iid";
    spec.seed = parse_u64(text.substr(4), "adversary seed");
    return spec;
  }
  throw ParseError("unknown adversary '" + text + "'; expected iid[:seed], best-response or replay:<file>");
}

Trace run(const RunSetup& setup, std::int64_t horizon, std::uint64_t seed) {
  std::optional<ClassicalReduction> reduction;
  AnyInstance played = setup.instance;
  if (setup.reduction == "classical") {
    const auto* app = std::get_if<ApproachabilityInstance>(&setup.instance);
    reduction = classical_reduce(app != nullptr ? *app
                                                : regret_as_approachability(std::get<RegretInstance>(setup.instance)));
    played = reduction->target;
  } else if (setup.reduction != "none") {
    throw PreconditionError("unknown reduction '" + setup.reduction + "'; expected none or classical");
  }
  const Objective objective(played);
  auto learner = build_learner(setup.learner, played, std::max<std::int64_t>(horizon, 1));
  auto adversary = build_adversary(setup.adversary, objective, reduction, seed);
  return simulate(*learner, *adversary, objective, horizon, seed);
}

std::vector<SweepRow> rate_sweep(const SweepSetup& setup) {
  if (!std::is_sorted(setup.horizons.begin(), setup.horizons.end())) {
    throw PreconditionError("sweep horizons must be ascending");
  }
  if (setup.seeds.empty()) throw PreconditionError("sweep needs at least one seed");
  struct Job {
    std::size_t row;
    std::size_t slot;
  };
  std::vector<Job> jobs;
  for (std::size_t r = 0; r < setup.horizons.size(); ++r) {
    for (std::size_t s = 0; s < setup.seeds.size(); ++s) jobs.push_back({r, s});
  }
  std::vector<double> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      const Job& job = jobs[k];
      results[k] = run(setup.run, setup.horizons[job.row], setup.seeds[job.slot]).final_loss_over_sqrt_t();
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, jobs.size() + 1);
  std::vector<std::future<void>> pool;
  for (std::size_t i = 0; i < threads; ++i) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();

  std::vector<SweepRow> rows;
  for (std::size_t r = 0; r < setup.horizons.size(); ++r) {
    SweepRow row;
    row.horizon = setup.horizons[r];
    double sum = 0.0;
    for (std::size_t s = 0; s < setup.seeds.size(); ++s) {
      const double v = results[r * setup.seeds.size() + s];
      sum += v;
      row.max = s == 0 ? v : std::max(row.max, v);
      row.min = s == 0 ? v : std::min(row.min, v);
    }
    row.runs = setup.seeds.size();
    row.mean = sum / static_cast<double>(row.runs);
    rows.push_back(row);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "T,runs,mean,max,min\n";
  for (const auto& r : rows) {
    out += std::to_string(r.horizon) + "," + std::to_string(r.runs) + "," + format_double(r.mean) + "," +
           format_double(r.max) + "," + format_double(r.min) + "\n";
  }
  return out;
}

}  // namespace approachlab
