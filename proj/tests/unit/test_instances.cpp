#include <algorithm>

#include "approachlab/corpus.hpp"
#include "approachlab/error.hpp"
#include "approachlab/instances.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace approachlab;
using testing::Random;

namespace {

AffineMapGen translation(const RationalVector& by) { return {RationalMatrix::identity(by.size()), by, "shift"}; }

RegretInstance experts_box(std::size_t n) {
  auto inst = corpus::experts(n);
  return inst;
}

// Random column-stochastic maps are proper on the simplex; mixing them with
// scaled identities produces improper but valid generators.
RegretInstance random_instance(Random& rnd, std::size_t d, std::size_t gens, bool proper) {
  std::vector<AffineMapGen> phi;
  for (std::size_t g = 0; g < gens; ++g) {
    RationalMatrix lin = testing::random_stochastic(rnd, d);
    if (!proper && rnd.integer(0, 1) == 0) {
      const Rational w = rnd.integer(2, 4);
      lin = lin * w - RationalMatrix::identity(d) * (w - 1);
    }
    phi.push_back({lin, RationalVector(d), "g" + std::to_string(g)});
  }
  return {"random", Polytope::simplex(d), Polytope::unit_cube(d), std::move(phi)};
}

}  // namespace

TEST_CASE("fixed points") {
  const auto a = corpus::figure2a();
  CHECK(find_fixed_point(a.Phi[0], a.P) == RationalVector{1, 0, 0});
  const auto id = AffineMapGen::identity(3, "id");
  const auto p = find_fixed_point(id, Polytope::simplex(3));
  REQUIRE(p);
  CHECK(Polytope::simplex(3).contains(*p));
  CHECK_FALSE(find_fixed_point(translation({1, 0, 0}), Polytope::simplex(3)));
  CHECK_THROWS_AS(find_fixed_point(id, Polytope::simplex(2)), DimensionError);
}

TEST_CASE("separating directions") {
  const auto P = Polytope::simplex(3);
  const auto w = separating_direction(translation({0, 0, -1}), P);
  REQUIRE(w);
  CHECK((*w)[2] > 0);
  for (const auto& v : P.vertices()) CHECK(dot(translation({0, 0, -1}).displacement(v), *w) > 0);

  CHECK_FALSE(separating_direction(corpus::figure2a().Phi[0], P));

  const AffineMapGen doubling{RationalMatrix::identity(3) * Rational(2), RationalVector(3), "double"};
  const auto w2 = separating_direction(doubling, P);
  REQUIRE(w2);
  for (const auto& v : P.vertices()) CHECK(dot(doubling.displacement(v), *w2) > 0);
  CHECK(*w2 == RationalVector{-1, -1, -1});
}

TEST_CASE("classification of bundled instances") {
  const auto a = classify(corpus::figure2a());
  CHECK(a.kind == InstanceClass::ImproperValid);
  REQUIRE(a.fixed_points.size() == 3);
  CHECK(a.fixed_points[0] == std::pair<std::string, RationalVector>{"phi1", {1, 0, 0}});
  CHECK(a.fixed_points[1].second == RationalVector{0, 1, 0});
  CHECK(a.fixed_points[2].second == RationalVector{0, 0, 1});

  CHECK(classify(corpus::experts(3)).kind == InstanceClass::External);
  CHECK(classify(corpus::swap_regret(2)).kind == InstanceClass::Proper);
  CHECK(classify(corpus::swap_regret(3)).kind == InstanceClass::Proper);
  CHECK(classify(corpus::figure2b()).kind == InstanceClass::ImproperValid);
  CHECK(classify(corpus::figure2c()).kind == InstanceClass::ImproperValid);
  CHECK(classify(corpus::ab_counterexample()).kind == InstanceClass::ImproperValid);
  CHECK(classify(corpus::external_alpha()).kind == InstanceClass::ImproperValid);

  const auto bad = classify(corpus::translation_instance());
  CHECK(bad.kind == InstanceClass::Invalid);
  REQUIRE(bad.witness);
  CHECK(bad.witness->label == "shift");
  CHECK(bad.fixed_points.empty());
}

TEST_CASE("classification ignores generator order and redundant mixtures") {
  Random rnd(21);
  for (int i = 0; i < 40; ++i) {
    auto inst = random_instance(rnd, 3, 3, i % 2 == 0);
    const auto kind = classify(inst).kind;
    auto shuffled = inst;
    std::reverse(shuffled.Phi.begin(), shuffled.Phi.end());
    CHECK(classify(shuffled).kind == kind);
    auto extended = inst;
    const auto w = rnd.distribution(3);
    AffineMapGen mix{RationalMatrix(3, 3), RationalVector(3), "mix"};
    for (std::size_t g = 0; g < 3; ++g) {
      mix.linear += inst.Phi[g].linear * w[g];
      mix.offset += inst.Phi[g].offset * w[g];
    }
    extended.Phi.push_back(mix);
    CHECK(classify(extended).kind == kind);
  }
}

TEST_CASE("proper instances have fixed points and exactly one certificate per generator") {
  Random rnd(22);
  for (int i = 0; i < 40; ++i) {
    const auto inst = random_instance(rnd, 2 + static_cast<std::size_t>(i % 3), 2, i % 2 == 0);
    const auto kind = classify(inst).kind;
    for (const auto& g : inst.Phi) {
      const bool fixed = find_fixed_point(g, inst.P).has_value();
      const bool separated = separating_direction(g, inst.P).has_value();
      CHECK(fixed != separated);
      if (kind == InstanceClass::Proper) CHECK(fixed);
    }
  }
  for (const auto& name : {"figure2a", "figure2b", "figure2c", "ab-counterexample", "experts", "swap", "translation-instance"}) {
    const auto inst = std::get<RegretInstance>(corpus::build(name));
    for (const auto& g : inst.Phi) {
      CHECK(find_fixed_point(g, inst.P).has_value() != separating_direction(g, inst.P).has_value());
    }
  }
}

TEST_CASE("regret of play") {
  const auto a = corpus::figure2a();
  CHECK(regret_of_play(a, {{1, 0, 0}}, {{0, 0, 0}}) == 0);
  CHECK(regret_of_play(corpus::figure2b(), {{0, 0, 1}}, {{0, 0, 1}}) == 2);
  CHECK(regret_of_play(corpus::experts(2), {{1, 0}, {1, 0}}, {{1, 0}, {1, 0}}) == 2);
  CHECK(regret_of_play(a, {}, {}) == 0);
  CHECK_THROWS_AS(regret_of_play(a, {{2, 0, 0}}, {{0, 0, 0}}), InvalidPlayError);
  CHECK_THROWS_AS(regret_of_play(a, {{1, 0, 0}}, {{2, 0, 0}}), InvalidPlayError);
  CHECK_THROWS_AS(regret_of_play(a, {{1, 0, 0}}, {}), DimensionError);
}

TEST_CASE("approachability loss") {
  const auto gap = corpus::gap_instance(2);
  Random rnd(23);
  std::vector<RationalVector> plays(20, {0, 0, 1});
  std::vector<RationalVector> losses;
  for (int t = 0; t < 20; ++t) losses.push_back(rnd.vertex_of(gap.L));
  CHECK(apploss_of_play(gap, plays, losses) == 0);
  CHECK(apploss_of_play(gap, {{1, 0, 0}}, {{0, 1, 0}}) == 0);
  CHECK(generator_payoffs(gap, {{1, 0, 0}}, {{0, 1, 0}}) == std::vector<Rational>{0, -1});
  CHECK(apploss_of_play(gap, {}, {}) == 0);
}

TEST_CASE("weighted regret") {
  const auto e3 = experts_box(3);
  std::vector<Rational> ones(3, Rational(1));
  CHECK(weighted_regret(e3, {1, 2, 3}, {{0, 0, 1}}, {{0, 0, 1}}) == 2);
  CHECK(weighted_regret(e3, ones, {}, {}) == 0);
  CHECK_THROWS_AS(weighted_regret(e3, {1, 0, 1}, {}, {}), PreconditionError);
  CHECK_THROWS_AS(weighted_regret(corpus::figure2a(), ones, {}, {}), PreconditionError);
  Random rnd(24);
  for (int i = 0; i < 20; ++i) {
    std::vector<RationalVector> plays, losses;
    for (int t = 0; t < 4; ++t) {
      plays.push_back(rnd.point_in(e3.P));
      losses.push_back(rnd.point_in(e3.L));
    }
    CHECK(weighted_regret(e3, ones, plays, losses) == regret_of_play(e3, plays, losses));
  }
}

TEST_CASE("regret as approachability") {
  const auto a = corpus::figure2a();
  const auto app = regret_as_approachability(a);
  REQUIRE(app.U.size() == 3);
  for (const auto& l : a.L.vertices()) CHECK(app.U[0].evaluate({1, 0, 0}, l) == 0);

  const RegretInstance id{"id", Polytope::simplex(2), Polytope::unit_cube(2), {AffineMapGen::identity(2, "id")}};
  CHECK(regret_as_approachability(id).U[0].is_zero());

  const auto e2 = regret_as_approachability(corpus::experts(2));
  Random rnd(25);
  for (int i = 0; i < 20; ++i) {
    const auto p = rnd.point_in(Polytope::simplex(2));
    const auto l = rnd.point_in(Polytope::unit_cube(2));
    CHECK(e2.U[0].evaluate(p, l) == dot(p - RationalVector{1, 0}, l));
  }
}

TEST_CASE("apploss of the translated instance equals regret on random sequences") {
  Random rnd(26);
  const char* names[] = {"figure2a", "figure2b", "figure2c", "ab-counterexample", "swap", "external-alpha"};
  for (const char* name : names) {
    const auto inst = std::get<RegretInstance>(corpus::build(name));
    const auto app = regret_as_approachability(inst);
    for (int i = 0; i < 10; ++i) {
      std::vector<RationalVector> plays, losses;
      const int T = static_cast<int>(rnd.integer(0, 5));
      for (int t = 0; t < T; ++t) {
        plays.push_back(rnd.point_in(inst.P));
        losses.push_back(rnd.point_in(inst.L));
      }
      CHECK(apploss_of_play(app, plays, losses) == regret_of_play(inst, plays, losses));
    }
  }
}

TEST_CASE("regret matches a naive evaluator on vertex sequences") {
  Random rnd(27);
  for (int i = 0; i < 60; ++i) {
    const std::size_t d = 2 + static_cast<std::size_t>(rnd.integer(0, 1));
    const auto inst = random_instance(rnd, d, 3, false);
    std::vector<RationalVector> plays, losses;
    const int T = static_cast<int>(rnd.integer(1, 3));
    for (int t = 0; t < T; ++t) {
      plays.push_back(rnd.vertex_of(inst.P));
      losses.push_back(rnd.vertex_of(inst.L));
    }
    CHECK(regret_of_play(inst, plays, losses).to_mpq() == testing::naive_regret(inst, plays, losses));
  }
}

TEST_CASE("validation") {
  RegretInstance empty{"e", Polytope::simplex(2), Polytope::unit_cube(2), {}};
  CHECK_THROWS(empty.validate());
  RegretInstance mismatch{"m", Polytope::simplex(2), Polytope::unit_cube(3), {AffineMapGen::identity(2, "id")}};
  CHECK_THROWS_AS(mismatch.validate(), DimensionError);
}

TEST_CASE("an affine constant term shifts every payoff") {
  BilinearGen g{RationalMatrix::identity(2), {1, 0}, {0, 1}, Rational(-1, 2), "affine"};
  CHECK(g.evaluate({1, 0}, {1, 1}) == Rational(1) + 1 + 0 - Rational(1, 2));
  CHECK(g.slope_at({1, 0}) == RationalVector{2, 0});
  CHECK(g.intercept_at({0, 1}) == Rational(1, 2));
}
