#include <benchmark/benchmark.h>

#include <cstdint>

#include "majority/core.hpp"
#include "majority/engine.hpp"
#include "majority/strategies.hpp"

using namespace majority;

namespace {

StrategyConfig strategy_for(StrategyKind kind) {
  StrategyConfig s;
  s.kind = kind;
  switch (kind) {
    case StrategyKind::ExAnteSymmetric:
    case StrategyKind::ExPostSymmetric:
      s.f1 = 1.0;
      s.f2 = 0.1;
      break;
    case StrategyKind::ExAnteAsymmetric:
      s.f = 0.25;
      break;
    case StrategyKind::ExPostAsymmetric:
      s.f = 0.5;
      break;
    case StrategyKind::Polya:
      s.m = 50;
      break;
    default:
      break;
  }
  return s;
}

void BM_SliceStep(benchmark::State& state, StrategyKind kind) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const SimConfig cfg = SimConfig::make(n, 1, 7);
  Simulation sim(cfg, strategy_for(kind));
  for (auto _ : state) {
    sim.step();
    benchmark::DoNotOptimize(sim.world().occ.counts.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}

void BM_SampleRestaurant(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const ProbabilityVector probs = uniform_probabilities(n);
  Rng rng = make_rng(1, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_restaurant(probs, rng));
  }
}

void BM_PolyaProbabilities(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  std::vector<std::uint32_t> visits(n, 0);
  Rng rng = make_rng(3, 4);
  for (std::uint32_t i = 0; i < 4 * n; ++i) ++visits[rng.uniform_below(n)];
  for (auto _ : state) {
    benchmark::DoNotOptimize(polya_probabilities(visits, n / 2, n));
  }
}

void BM_SymmetricUpdate(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const ProbabilityVector probs = uniform_probabilities(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(symmetric_update(probs, 0, n - 1, 1.0, 0.1));
  }
}

void BM_AvgMaxProb(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const SimConfig cfg = SimConfig::make(n, 1, 7);
  Simulation sim(cfg, strategy_for(StrategyKind::Polya));
  sim.step();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sim.snapshot().avg_max_prob);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_SliceStep, no_learning, StrategyKind::NoLearning)
    ->Arg(100)->Arg(500);
BENCHMARK_CAPTURE(BM_SliceStep, ex_ante_symmetric, StrategyKind::ExAnteSymmetric)
    ->Arg(100)->Arg(500);
BENCHMARK_CAPTURE(BM_SliceStep, ex_ante_asymmetric, StrategyKind::ExAnteAsymmetric)
    ->Arg(100)->Arg(500);
BENCHMARK_CAPTURE(BM_SliceStep, polya, StrategyKind::Polya)->Arg(100)->Arg(500);
BENCHMARK_CAPTURE(BM_SliceStep, ex_post_symmetric, StrategyKind::ExPostSymmetric)
    ->Arg(100)->Arg(500);
BENCHMARK_CAPTURE(BM_SliceStep, ex_post_asymmetric, StrategyKind::ExPostAsymmetric)
    ->Arg(100)->Arg(500);
BENCHMARK(BM_SampleRestaurant)->Arg(100)->Arg(500);
BENCHMARK(BM_PolyaProbabilities)->Arg(100)->Arg(500);
BENCHMARK(BM_SymmetricUpdate)->Arg(100)->Arg(500);
BENCHMARK(BM_AvgMaxProb)->Arg(100)->Arg(500);

BENCHMARK_MAIN();
