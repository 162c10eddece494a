#include <benchmark/benchmark.h>

#include <random>

#include "fincat/catalog.hpp"
#include "fincat/constructions.hpp"
#include "fincat/enumerate.hpp"
#include "fincat/kan.hpp"
#include "fincat/limits.hpp"
#include "fincat/universes.hpp"
#include "fincat/yoneda.hpp"

using namespace fincat;

namespace {

void BM_EnumerateFunctors(benchmark::State& state) {
  auto c = chain_category(static_cast<std::size_t>(state.range(0)));
  auto d = chain_category(static_cast<std::size_t>(state.range(0)) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_functors(c, d));
}
BENCHMARK(BM_EnumerateFunctors)->DenseRange(2, 5);

void BM_EnumerateCategories(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_categories(2, static_cast<std::size_t>(state.range(0)), true));
  }
}
BENCHMARK(BM_EnumerateCategories)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_LimitBySearch(benchmark::State& state) {
  auto target = chain_category(static_cast<std::size_t>(state.range(0)));
  auto diagrams = enumerate_functors(preorder_category(3, {{0, 2}, {1, 2}}), target);
  for (auto _ : state)
    for (const auto& d : diagrams) benchmark::DoNotOptimize(limit_by_search(d));
  state.counters["diagrams"] = static_cast<double>(diagrams.size());
}
BENCHMARK(BM_LimitBySearch)->DenseRange(2, 4);

Diagram random_diagram(const CatRef& shape, std::size_t max_size, std::uint32_t seed) {
  auto all = enumerate_diagrams(shape, max_size);
  std::mt19937 gen(seed);
  return all[gen() % all.size()];
}

void BM_FinSetLimit(benchmark::State& state) {
  auto d = random_diagram(preorder_category(3, {{0, 2}, {1, 2}}), static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(finset_limit(d));
}
BENCHMARK(BM_FinSetLimit)->DenseRange(2, 4);

void BM_FinSetColimit(benchmark::State& state) {
  auto d = random_diagram(preorder_category(3, {{0, 1}, {0, 2}}), static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(finset_colimit(d));
}
BENCHMARK(BM_FinSetColimit)->DenseRange(2, 4);

void BM_ScanCompletePreorder(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_complete_preorder(3, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_ScanCompletePreorder)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_RightKan(benchmark::State& state) {
  auto c = discrete_category(2);
  auto d = walking_arrow();
  auto p = enumerate_functors(c, d).back();
  auto f = enumerate_functors(c, chain_category(static_cast<std::size_t>(state.range(0)))).back();
  for (auto _ : state) benchmark::DoNotOptimize(right_kan_pointwise(f, p));
}
BENCHMARK(BM_RightKan)->DenseRange(2, 5);

void BM_YonedaBijection(benchmark::State& state) {
  auto c = chain_category(3);
  auto f = random_diagram(opposite(c), static_cast<std::size_t>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(yoneda_bijection(c, f, ObjId{0}));
}
BENCHMARK(BM_YonedaBijection)->DenseRange(1, 3);

void BM_Solver(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Constraint> cs;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    cs.push_back({Relation::Lt, LevelExpr::atom("u" + std::to_string(i)), LevelExpr::atom("u" + std::to_string(i + 1)), ""});
  }
  cs.push_back({Relation::Le, LevelExpr::atom("u" + std::to_string(n - 1)), LevelExpr::atom("u0", n), ""});
  for (auto _ : state) benchmark::DoNotOptimize(check_consistency(cs));
}
BENCHMARK(BM_Solver)->RangeMultiplier(4)->Range(4, 1024);

void BM_Scenario(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_builtin_scenario("set-in-cat"));
}
BENCHMARK(BM_Scenario);

}  // namespace

BENCHMARK_MAIN();
