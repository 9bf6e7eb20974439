#include <benchmark/benchmark.h>

#include "hedonica/fixtures.hpp"
#include "hedonica/generate.hpp"
#include "hedonica/solve.hpp"

using namespace hedonica;

namespace {

Game
random_game(GeneratorKind kind, int n)
{
  return generate({kind, n, 17, -5, 5});
}

void
BM_PartitionEnumeration(benchmark::State& state)
{
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_partition(n, [&](const Partition&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_PartitionEnumeration)->DenseRange(6, 10, 2);

void
BM_CoreCheck(benchmark::State& state)
{
  const int n = static_cast<int>(state.range(0));
  // Nobody ever strictly gains, so every coalition is scanned.
  const Game g = NeutrallyAnonymousRepr(std::vector<Rational>(static_cast<std::size_t>(n)));
  const Partition p = Partition::grand(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_strong_core_stable(g, p).stable());
  }
}
BENCHMARK(BM_CoreCheck)->DenseRange(8, 14, 2);

void
BM_LocalSearch(benchmark::State& state)
{
  const int n = static_cast<int>(state.range(0));
  const Game g = random_game(GeneratorKind::kRandomSubsetNeutral, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_nash_local_search(g).trace.size());
  }
}
BENCHMARK(BM_LocalSearch)->DenseRange(6, 14, 4);

void
BM_EnumerateStable(benchmark::State& state)
{
  const Game g = load_fixture("ex7_no_nash_core");
  const Notion notions[] = {Notion::kNash, Notion::kCore};
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_stable(g, notions).size());
  }
}
BENCHMARK(BM_EnumerateStable);

void
BM_HasCommonRanking(benchmark::State& state)
{
  const int n = static_cast<int>(state.range(0));
  const Game g = random_game(GeneratorKind::kRandomUtilityTable, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(has_common_ranking(g).holds());
  }
}
BENCHMARK(BM_HasCommonRanking)->DenseRange(4, 10, 3);

}  // namespace

BENCHMARK_MAIN();
