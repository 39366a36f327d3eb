#include <benchmark/benchmark.h>

#include "arlab/classes.hpp"
#include "arlab/evolution.hpp"
#include "arlab/learners.hpp"
#include "arlab/leveled.hpp"
#include "arlab/max_margin.hpp"
#include "arlab/random_instances.hpp"
#include "arlab/shattering.hpp"

using namespace arlab;

namespace {

const FiniteClass& shifted() {
  static const FiniteClass F = make_shifted_subset_class(IntervalSet({1, 3, 4}), 16, 32);
  return F;
}

void BM_RestrictE2e(benchmark::State& state) {
  const Domain D = chain_domain(8);
  const auto T = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(restrict_e2e(shifted(), D, T));
}
BENCHMARK(BM_RestrictE2e)->Arg(1)->Arg(4)->Arg(8);

void BM_VcDimension(benchmark::State& state) {
  const FiniteClass F = make_full_class(16);
  const auto R = restrict_e2e(F, chain_domain(10), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vc_dimension(R));
}
BENCHMARK(BM_VcDimension)->DenseRange(1, 5);

void BM_LeveledSubtreeDepth(benchmark::State& state) {
  Rng rng(11);
  const BinaryTree t = random_tree(static_cast<std::size_t>(state.range(0)), 0.7, rng);
  state.counters["nodes"] = static_cast<double>(t.size());
  for (auto _ : state) benchmark::DoNotOptimize(leveled_subtree_depth(t));
}
BENCHMARK(BM_LeveledSubtreeDepth)->Arg(6)->Arg(10)->Arg(14);

void BM_MaxMargin(benchmark::State& state) {
  Rng rng(12);
  const std::size_t d = 3;
  const Generator f = make_linear_generator(random_linear_params(d, 3, rng), 16);
  BinarySample A;
  for (int k = 0; k < state.range(0); ++k) {
    const BitString x = random_bits(rng.below(8), rng);
    A.push_back({x, f(x), std::nullopt});
  }
  for (auto _ : state) benchmark::DoNotOptimize(max_margin(A, d));
}
BENCHMARK(BM_MaxMargin)->Arg(8)->Arg(32)->Arg(128);

void BM_CotCompress(benchmark::State& state) {
  Rng rng(13);
  const auto m = static_cast<std::size_t>(state.range(0));
  const CotSample S = random_realizable_sample(shifted()[rng.below(shifted().size())], m, 4, 12, rng);
  for (auto _ : state) benchmark::DoNotOptimize(cot_compress(shifted(), S, 1));
}
BENCHMARK(BM_CotCompress)->Arg(5)->Arg(20)->Arg(80);

}  // namespace

BENCHMARK_MAIN();
