#include <benchmark/benchmark.h>

#include "unimodal/alpha_maps.hpp"
#include "unimodal/indpoly.hpp"
#include "unimodal/proof_check.hpp"

using namespace unimodal;

static void BM_IndpolyTree(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  Graph g = build_t3mn_star(k, k);
  for (auto _ : state) benchmark::DoNotOptimize(indpoly_tree(g));
}
BENCHMARK(BM_IndpolyTree)->Arg(4)->Arg(12)->Arg(48);

static void BM_ScanGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scan_families(1, 12, 1, 12, Family::T3mn, 1));
}
BENCHMARK(BM_ScanGrid)->Unit(benchmark::kMillisecond);

// Shadow of every feasible alpha on T(3,1,1), fast evaluator.
static void BM_ShadowEvaluator(benchmark::State& state) {
  Graph g = build_t3mn(1, 1);
  auto alphas = enumerate_feasible(g);
  ShadowEvaluator ev(g);
  HomogeneousShadow h;
  for (auto _ : state)
    for (const auto& a : alphas) {
      ev.evaluate(a.values(), h);
      benchmark::DoNotOptimize(h);
    }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(alphas.size()));
}
BENCHMARK(BM_ShadowEvaluator)->Unit(benchmark::kMillisecond);

// Same shadows through the clan graph.
static void BM_ShadowLiteral(benchmark::State& state) {
  Graph g = build_spider_2(4);
  auto alphas = enumerate_feasible(g);
  for (auto _ : state)
    for (const auto& a : alphas) benchmark::DoNotOptimize(chromatic_multicolor_2var(g, a.values()));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(alphas.size()));
}
BENCHMARK(BM_ShadowLiteral)->Unit(benchmark::kMillisecond);

static void BM_ComponentSum(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  Graph g = build_t3mn_star(k, k);
  for (auto _ : state) benchmark::DoNotOptimize(y_g_2var_component_sum(g));
}
BENCHMARK(BM_ComponentSum)->Arg(1)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_TreeAudit(benchmark::State& state) {
  VerifyOptions opt;
  opt.threads = 1;
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_section4(m, 1, opt));
}
BENCHMARK(BM_TreeAudit)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
