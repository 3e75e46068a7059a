#include "approachlab/corpus.hpp"
#include "approachlab/error.hpp"
#include "approachlab/reductions.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace approachlab;
using testing::Random;

namespace {

// u(p, l) = <p - e_1, l> on the 2-simplex with losses in [0,1]^2.
ApproachabilityInstance toward_first() {
  return regret_as_approachability(
      {"first", Polytope::simplex(2), Polytope::unit_cube(2), {AffineMapGen::constant({1, 0}, "e1")}});
}

BilinearGen constant_gen(std::size_t dp, std::size_t dl, const Rational& c) {
  return {RationalMatrix(dp, dl), RationalVector(dl), RationalVector(dp), c, "const"};
}

Rational max_value(const std::vector<BilinearGen>& gens, const RationalVector& p, const RationalVector& l) {
  Rational best = gens.front().evaluate(p, l);
  for (const auto& g : gens) best = std::max(best, g.evaluate(p, l));
  return best;
}

}  // namespace

TEST_CASE("classical reduction shape") {
  const auto red = classical_reduce(corpus::gap_instance(2));
  CHECK(red.target.P.is_standard_simplex());
  CHECK(red.target.P.ambient_dim() == 2);
  CHECK(classify(red.target).kind == InstanceClass::External);
  for (const auto& g : red.target.Phi) CHECK(red.target.P.vertex_index(g.offset).has_value());
  const RationalVector p{Rational(1, 2), Rational(1, 2), 0};
  const RationalVector l{1, 0, 1};
  CHECK(red.target_loss(p, l) == RationalVector{Rational(1, 2), Rational(-1, 2)});
  // The target losses are exactly the negated payoffs of vertex pairs.
  CHECK(red.target.L.contains(red.target_loss({1, 0, 0}, {0, 1, 1})));
}

TEST_CASE("halfspace actions satisfy the mixed constraint") {
  const auto gap = corpus::gap_instance(2);
  const auto red = classical_reduce(gap);
  Random rnd(31);
  for (int i = 0; i < 30; ++i) {
    const auto w = rnd.distribution(2);
    const RationalVector coeffs{w[0], w[1]};
    for (const auto& p : {halfspace_action(gap, coeffs), red.action(coeffs)}) {
      CHECK(gap.P.contains(p));
      for (const auto& l : gap.L.vertices()) {
        CHECK(coeffs[0] * gap.U[0].evaluate(p, l) + coeffs[1] * gap.U[1].evaluate(p, l) <= 0);
      }
    }
  }
  CHECK(halfspace_action(toward_first(), {1}) == RationalVector{1, 0});
  CHECK(classical_reduce(toward_first()).action({1}) == RationalVector{1, 0});
  CHECK_THROWS_AS(halfspace_action(gap, {Rational(1, 2), Rational(1, 3)}), PreconditionError);
}

TEST_CASE("a zero constraint accepts the first vertex") {
  ApproachabilityInstance zero{"zero", Polytope::simplex(3), Polytope::unit_cube(3), {constant_gen(3, 3, 0)}};
  CHECK(halfspace_action(zero, {1}) == RationalVector{1, 0, 0});
}

TEST_CASE("an unapproachable mix is certified") {
  ApproachabilityInstance bad{"bad",
                              Polytope::simplex(2),
                              Polytope::unit_cube(2),
                              {{RationalMatrix::identity(2), RationalVector(2), RationalVector(2), 0, "pay"}}};
  CHECK_THROWS_AS(halfspace_action(bad, {1}), NotApproachableError);
  CHECK_THROWS_AS(classical_reduce(bad).action({1}), NotApproachableError);
}

TEST_CASE("tight reduction round trip on experts") {
  const auto src = regret_as_approachability(corpus::experts(2));
  const auto red = tight_improper_reduce(src);
  CHECK(red.generator_bijection.size() == src.U.size());
  Random rnd(32);
  for (int i = 0; i < 10; ++i) {
    std::vector<RationalVector> plays, losses, xs, ls;
    for (int t = 0; t < 5; ++t) {
      plays.push_back(rnd.point_in(src.P));
      losses.push_back(rnd.point_in(src.L));
      const auto w = rnd.distribution(2);
      xs.push_back(red.map_play({w[0], w[1]}, plays.back()));
      ls.push_back(red.map_loss(losses.back()));
    }
    CHECK(regret_of_play(red.target, xs, ls) == apploss_of_play(src, plays, losses));
  }
}

TEST_CASE("tight reduction of a zero constraint has zero regret") {
  ApproachabilityInstance zero{"zero", Polytope::simplex(2), Polytope::unit_cube(2), {constant_gen(2, 2, 0)}};
  const auto red = tight_improper_reduce(zero);
  REQUIRE(red.target.Phi.size() == 1);
  CHECK(regret_of_play(red.target, {red.map_play({0, 1})}, {red.map_loss({1, 1})}) == 0);
}

TEST_CASE("tight reduction: the free action never accrues regret") {
  const auto gap = corpus::gap_instance(2);
  const auto red = tight_improper_reduce(gap);
  CHECK_FALSE(red.augmented);
  Random rnd(33);
  std::vector<RationalVector> xs, ls;
  for (int t = 0; t < 12; ++t) {
    const auto w = rnd.distribution(2);
    xs.push_back(red.map_play({w[0], w[1]}, {0, 0, 1}));
    ls.push_back(red.map_loss(rnd.vertex_of(gap.L)));
    CHECK(regret_of_play(red.target, xs, ls) <= 0);
  }
}

TEST_CASE("tight reduction augments for affine constraints") {
  ApproachabilityInstance aff{"aff",
                              Polytope::simplex(2),
                              Polytope::unit_cube(2),
                              {{RationalMatrix::identity(2), {0, 1}, {1, 0}, Rational(-3, 2), "a"},
                               constant_gen(2, 2, Rational(-1))}};
  const auto red = tight_improper_reduce(aff);
  CHECK(red.augmented);
  CHECK(red.target.dim() == 6);
  Random rnd(34);
  for (int i = 0; i < 10; ++i) {
    const auto p = rnd.point_in(aff.P);
    const auto l = rnd.point_in(aff.L);
    CHECK(regret_of_play(red.target, {red.map_play(p)}, {red.map_loss(l)}) == apploss_of_play(aff, {p}, {l}));
  }
}

TEST_CASE("weighted rewrite to an improper instance") {
  const RegretInstance one{"one", Polytope::simplex(3), Polytope::unit_cube(3), {AffineMapGen::constant({1, 0, 0}, "e1")}};
  const auto tilde = weighted_to_improper(one, {2});
  CHECK(tilde.Phi[0].apply({Rational(1, 2), Rational(1, 4), Rational(1, 4)}) ==
        RationalVector{Rational(3, 2), Rational(-1, 4), Rational(-1, 4)});

  const auto e3 = corpus::experts(3);
  const auto same = weighted_to_improper(e3, {1, 1, 1});
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(same.Phi[i].linear == e3.Phi[i].linear);
    CHECK(same.Phi[i].offset == e3.Phi[i].offset);
  }
  const auto b = weighted_to_improper(e3, {1, 2, 3});
  const auto fig = corpus::figure2b();
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(b.Phi[i].linear == fig.Phi[i].linear);
    CHECK(b.Phi[i].offset == fig.Phi[i].offset);
  }
  CHECK_THROWS_AS(weighted_to_improper(fig, {1, 1, 1}), PreconditionError);
  CHECK_THROWS_AS(weighted_to_improper(e3, {1, -1, 1}), PreconditionError);
  CHECK_THROWS_AS(weighted_to_improper(e3, {1, 1}), DimensionError);
}

TEST_CASE("weighted rewrite to a proper instance") {
  const auto e3 = corpus::experts(3);
  const auto wp = weighted_to_proper(e3, {1, 2, 3});
  CHECK(wp.scale == 3);
  CHECK(wp.instance.L == e3.L.scaled(3));
  CHECK(classify(wp.instance).kind == InstanceClass::Proper);
  const RationalVector p{Rational(1, 2), 0, Rational(1, 2)};
  CHECK(wp.instance.Phi[0].apply(p) == RationalVector{Rational(2, 3), 0, Rational(1, 3)});

  const auto tilde = weighted_to_improper(e3, {1, 2, 3});
  for (std::size_t i = 0; i < 3; ++i) {
    for (const auto& v : e3.P.vertices()) {
      for (const auto& l : e3.L.vertices()) {
        CHECK(dot(tilde.Phi[i].displacement(v), l) == dot(wp.instance.Phi[i].displacement(v), l * Rational(3)));
      }
    }
  }
  CHECK(dot(tilde.Phi[1].displacement({0, 0, 1}), {0, 0, 1}) == 2);
  CHECK(dot(wp.instance.Phi[1].displacement({0, 0, 1}), {0, 0, 3}) == 2);

  const auto flat = weighted_to_proper(e3, {2, 2, 2});
  CHECK(flat.scale == 2);
  for (std::size_t i = 0; i < 3; ++i) CHECK(flat.instance.Phi[i].offset == e3.Phi[i].offset);
}

TEST_CASE("orthant reduction examples") {
  // Coordinates of the payoff vector are two constant components.
  const std::vector<BilinearGen> comps{constant_gen(1, 1, 1), constant_gen(1, 1, 1)};
  const Polytope neg_box({{-2, -2}, {0, -2}, {-2, 0}, {0, 0}});
  const Polytope linf({{-1, -1}, {1, -1}, {-1, 1}, {1, 1}});
  const auto units = orthant_reduce(comps, neg_box, linf, {{1, 0}, {0, 1}});
  REQUIRE(units.size() == 2);
  CHECK(max_value(units, {1}, {0}) == 1);

  // With zero components the generator is the component itself.
  const auto pass = orthant_reduce({corpus::gap_instance(2).U[0], corpus::gap_instance(2).U[1]}, neg_box, linf,
                                   {{1, 0}, {0, 1}});
  CHECK(pass[0].M == corpus::gap_instance(2).U[0].M);
  CHECK(pass[0].c == 0);

  for (const Rational x : {Rational(3), Rational(-5, 2), Rational(0)}) {
    const auto abs = orthant_reduce({constant_gen(1, 1, x)}, Polytope::point({0}), Polytope({{-1}, {1}}), {{1}, {-1}});
    CHECK(max_value(abs, {1}, {0}) == x.abs());
  }
  CHECK_THROWS_AS(orthant_reduce(comps, neg_box, Polytope({{0, 0}, {1, 0}}), {{0, 1}}), PreconditionError);
  CHECK_THROWS_AS(orthant_reduce(comps, neg_box, linf, {}), PreconditionError);
}
