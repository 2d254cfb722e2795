#include <benchmark/benchmark.h>

#include "newmac/search.hpp"

namespace {

using namespace newmac;

// Time to the first witness for several seeds; items/sec counts the samples
// the run actually consumed (index of the witness + 1), not the budget.
void BM_SearchToFirstWitness(benchmark::State& state) {
  const SearchConfig cfg{AlphaVector({Rational(0), Rational(1)}),
                         3,
                         4,
                         Natural(1000000ul),
                         Natural(12ul),
                         Natural(12ul),
                         static_cast<std::uint64_t>(state.range(0)),
                         GapForm::Q};
  const auto probe = find_counterexample(cfg);
  const long consumed =
      probe ? static_cast<long>(probe->sample_index) + 1 : 1000000L;
  for (auto _ : state) benchmark::DoNotOptimize(find_counterexample(cfg));
  state.SetItemsProcessed(state.iterations() * consumed);
}
BENCHMARK(BM_SearchToFirstWitness)->Arg(1)->Arg(2)->Arg(3);

void BM_SweepGrid(benchmark::State& state) {
  const AlphaVector alpha({Rational(0), Rational(1)});
  std::vector<VariableVector> grid;
  SplitMix64 rng(5);
  for (long i = 0; i < state.range(0); ++i) {
    std::vector<Rational> e;
    for (int j = 0; j < 4; ++j) e.push_back(random_rational(rng, 12, 12));
    grid.emplace_back(std::move(e));
  }
  for (auto _ : state) benchmark::DoNotOptimize(sweep_gap(alpha, 3, GapForm::Q, grid));
}
BENCHMARK(BM_SweepGrid)->Arg(64)->Arg(256);

} // namespace
