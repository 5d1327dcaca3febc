#include <benchmark/benchmark.h>

#include "hbm/engine.hpp"
#include "hbm/generators.hpp"
#include "hbm/oracles.hpp"
#include "hbm/signature.hpp"

namespace {

hbm::BipartiteHypergraph instance(hbm::GeneratorMode mode, std::uint32_t r, std::uint32_t na,
                                  std::uint32_t extra, std::uint64_t seed) {
  hbm::GeneratorSpec spec;
  spec.mode = mode;
  spec.r = r;
  spec.a_count = na;
  spec.extra_edges = extra;
  spec.seed = seed;
  switch (mode) {
    case hbm::GeneratorMode::Guaranteed:
      spec.b_count = hbm::default_private_degree(r, 1) * (r - 1) * na + 2 * (r - 1);
      break;
    case hbm::GeneratorMode::Adversarial:
      spec.b_count = (r - 1) * na;
      break;
    default:
      spec.b_count = 2 * (r - 1) * na;
  }
  return hbm::generate(spec);
}

void BM_SolveGuaranteed(benchmark::State& state) {
  const auto na = static_cast<std::uint32_t>(state.range(0));
  const auto h = instance(hbm::GeneratorMode::Guaranteed, 3, na, 4 * na, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hbm::find_perfect_matching(h, hbm::Rational(1)));
  }
  state.SetComplexityN(na);
}
BENCHMARK(BM_SolveGuaranteed)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_SolvePlanted(benchmark::State& state) {
  const auto na = static_cast<std::uint32_t>(state.range(0));
  const auto h = instance(hbm::GeneratorMode::Planted, 3, na, 6 * na, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hbm::find_perfect_matching(h, hbm::Rational(1, 2)));
  }
  state.SetComplexityN(na);
}
BENCHMARK(BM_SolvePlanted)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_SolveAdversarial(benchmark::State& state) {
  const auto h = instance(hbm::GeneratorMode::Adversarial, 3, static_cast<std::uint32_t>(state.range(0)), 0, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hbm::find_perfect_matching(h, hbm::Rational(1, 2)));
  }
}
BENCHMARK(BM_SolveAdversarial)->Arg(16)->Arg(64)->Arg(256);

void BM_SolveWithInvariants(benchmark::State& state) {
  const auto h = instance(hbm::GeneratorMode::Planted, 3, 64, 300, 4);
  hbm::SolveOptions opt;
  opt.debug_invariants = true;
  for (auto _ : state) {
    hbm::InvariantReport report;
    opt.invariants = &report;
    benchmark::DoNotOptimize(hbm::find_perfect_matching(h, hbm::Rational(1, 2), opt));
  }
}
BENCHMARK(BM_SolveWithInvariants);

void BM_MinHittingSet(benchmark::State& state) {
  const auto h = instance(hbm::GeneratorMode::Planted, 3, static_cast<std::uint32_t>(state.range(0)), 20, 5);
  std::vector<hbm::EdgeId> all(h.edge_count());
  for (hbm::EdgeId e = 0; e < all.size(); ++e) all[e] = e;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hbm::min_hitting_set(h, all));
  }
}
BENCHMARK(BM_MinHittingSet)->Arg(4)->Arg(8)->Arg(12);

void BM_Signature(benchmark::State& state) {
  hbm::SignatureEvaluator ev(hbm::Parameters::make(hbm::Rational(1), 3, 100));
  std::vector<hbm::LayerSizes> layers;
  for (std::size_t i = 0; i < static_cast<std::size_t>(state.range(0)); ++i) layers.push_back({3 + 2 * i, 3 + 2 * i});
  for (auto _ : state) {
    benchmark::DoNotOptimize(ev.evaluate(layers));
  }
}
BENCHMARK(BM_Signature)->Arg(1)->Arg(8);

}  // namespace
BENCHMARK_MAIN();
