#include <benchmark/benchmark.h>

#include "treelab/enumerate.hpp"
#include "treelab/kernels.hpp"
#include "treelab/permutation.hpp"
#include "treelab/tree_stats.hpp"

using namespace treelab;

namespace {

const std::vector<WeaklyIncreasingTree>& family() {
  static const auto f = enumerate_wit(parse_multiset("1^2,2^2,3^2,4^2"));
  return f;
}

std::vector<int> tree_exponents(const WeaklyIncreasingTree& t) {
  const auto s = wit_stats(t);
  return {s.oleaf, s.yleaf, s.oint, s.yint};
}

std::vector<int> perm_exponents(const std::vector<int>& w) {
  const auto s = perm_stats(Permutation(w));
  return {s.dd, s.da, s.pk1, s.pk2};
}

void BM_TreeCountsSerial(benchmark::State& state) {
  const std::span<const WeaklyIncreasingTree> items(family());
  for (auto _ : state) benchmark::DoNotOptimize(count_exponents_serial(items, tree_exponents));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(items.size()));
}

void BM_TreeCountsParallel(benchmark::State& state) {
  const std::span<const WeaklyIncreasingTree> items(family());
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_exponents_parallel(items, tree_exponents, jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(items.size()));
}

void BM_PermCountsSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_permutations_serial(n, perm_exponents));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(permutation_count(n)));
}

void BM_PermCountsParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_permutations_parallel(n, perm_exponents, jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(permutation_count(n)));
}

}  // namespace

BENCHMARK(BM_TreeCountsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TreeCountsParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PermCountsSerial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PermCountsParallel)->Args({8, 1})->Args({8, 4})->Args({8, 8})->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
