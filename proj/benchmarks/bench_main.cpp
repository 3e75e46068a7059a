#include <benchmark/benchmark.h>

#include "approachlab/corpus.hpp"
#include "approachlab/equivalence.hpp"
#include "approachlab/lp.hpp"
#include "approachlab/polytope.hpp"
#include "approachlab/simulation.hpp"

using namespace approachlab;

namespace {

void BM_DotDyadic(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  RationalVector a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = Rational(static_cast<std::int64_t>(i + 1), std::int64_t{1} << 40);
    b[i] = Rational(static_cast<std::int64_t>(i % 2));
  }
  for (auto _ : state) benchmark::DoNotOptimize(dot(a, b));
}
BENCHMARK(BM_DotDyadic)->Arg(8)->Arg(64);

void BM_LpSimplexProjection(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  LinearProgram lp(n);
  for (std::size_t i = 0; i < n; ++i) {
    lp.objective[i] = Rational(static_cast<std::int64_t>((i * 7) % 5) - 2, 3);
    lp.add_nonnegative(i);
  }
  lp.add_equality(RationalVector::constant(n, 1), 1);
  for (auto _ : state) benchmark::DoNotOptimize(lp_solve(lp));
}
BENCHMARK(BM_LpSimplexProjection)->Arg(4)->Arg(16);

void BM_GeneralMembership(benchmark::State& state) {
  const Polytope P({{0, 0, 0}, {2, 0, 1}, {0, 3, 1}, {1, 1, 4}, {3, 2, 2}});
  const RationalVector q{1, 1, Rational(3, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(P.contains(q));
}
BENCHMARK(BM_GeneralMembership);

void BM_DecideProper(benchmark::State& state) {
  const auto lin = canonicalize(corpus::figure2b());
  for (auto _ : state) benchmark::DoNotOptimize(decide_proper(lin, 20, 1));
}
BENCHMARK(BM_DecideProper)->Unit(benchmark::kMillisecond);

void BM_SimulateHedge(benchmark::State& state) {
  RunSetup setup{corpus::experts(8), "none", "hedge", {}};
  setup.adversary.kind = "best-response";
  const std::int64_t T = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(run(setup, T, 1));
  state.SetItemsProcessed(state.iterations() * T);
}
BENCHMARK(BM_SimulateHedge)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SimulateBlackwell(benchmark::State& state) {
  RunSetup setup{corpus::gap_instance(3), "none", "blackwell", {}};
  const std::int64_t T = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(run(setup, T, 1));
  state.SetItemsProcessed(state.iterations() * T);
}
BENCHMARK(BM_SimulateBlackwell)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
