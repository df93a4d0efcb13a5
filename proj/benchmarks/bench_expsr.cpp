#include <benchmark/benchmark.h>

#include "expsr/catalog.hpp"
#include "expsr/classify.hpp"
#include "expsr/ideals.hpp"
#include "expsr/numeric.hpp"
#include "expsr/verify.hpp"

namespace {

expsr::ExpectationInstance instance(const std::string& module) {
  auto m = expsr::builtin_module(module);
  return expsr::build_expectation(m->base_ptr(), m);
}

void BM_BuildExpectation(benchmark::State& state) {
  auto m = expsr::builtin_module("zmod_4/self");
  for (auto _ : state) benchmark::DoNotOptimize(expsr::build_expectation(m->base_ptr(), m));
}
BENCHMARK(BM_BuildExpectation);

void BM_IdealsSubsetScan(benchmark::State& state) {
  auto e = instance("zmod_4/self");
  for (auto _ : state) benchmark::DoNotOptimize(expsr::enumerate_ideals_by_subset_scan(e.product()));
}
BENCHMARK(BM_IdealsSubsetScan);

void BM_IdealsGeneration(benchmark::State& state) {
  auto e = instance("zmod_4/self");
  for (auto _ : state) benchmark::DoNotOptimize(expsr::enumerate_ideals_by_generation(e.product()));
}
BENCHMARK(BM_IdealsGeneration);

void BM_ClassifyProduct(benchmark::State& state) {
  auto e = instance("zmod_4/self");
  for (auto _ : state) benchmark::DoNotOptimize(expsr::classify(e));
}
BENCHMARK(BM_ClassifyProduct);

void BM_EnumerateSemirings(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expsr::enumerate_semirings(order));
}
BENCHMARK(BM_EnumerateSemirings)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ForwardTotal(benchmark::State& state) {
  // A layered DAG: `width` parallel edges between consecutive nodes.
  const auto layers = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> nodes;
  std::vector<expsr::Edge> edges;
  for (std::size_t i = 0; i <= layers; ++i) nodes.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i < layers; ++i)
    for (int k = 0; k < 4; ++k) edges.push_back({i, i + 1, 0.25, {1.0, 0.5, -0.5}});
  expsr::WeightedDag g(3, nodes, 0, layers, edges);
  for (auto _ : state) benchmark::DoNotOptimize(expsr::forward_total(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ForwardTotal)->RangeMultiplier(4)->Range(4, 4096)->Complexity(benchmark::oN);

void BM_VerifyCase(benchmark::State& state) {
  auto m = expsr::builtin_module("zmod_4/self");
  const expsr::VerificationCase c{"zmod_4 (+) zmod_4/self", m->base_ptr(), m};
  for (auto _ : state) benchmark::DoNotOptimize(expsr::verify_case(c));
}
BENCHMARK(BM_VerifyCase)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
