#include <benchmark/benchmark.h>

#include "newmac/condition_c.hpp"
#include "newmac/inequalities.hpp"
#include "newmac/rng.hpp"

namespace {

using namespace newmac;

VariableVector make_vector(long n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Rational> e;
  e.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) e.push_back(random_rational(rng, 12, 12));
  return VariableVector(std::move(e));
}

void BM_SigmaAll(benchmark::State& state) {
  const VariableVector x = make_vector(state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(sigma_all(x));
}
BENCHMARK(BM_SigmaAll)->Arg(8)->Arg(32)->Arg(128);

void BM_SturmSequence(benchmark::State& state) {
  std::vector<Rational> roots;
  for (long i = 1; i <= state.range(0); ++i)
    roots.push_back(Rational(Integer(i), Integer(i % 5 + 1)));
  const Polynomial p = poly_from_roots(roots);
  for (auto _ : state) benchmark::DoNotOptimize(sturm_sequence(p));
}
BENCHMARK(BM_SturmSequence)->Arg(6)->Arg(12)->Arg(18);

void BM_IsolateRoots(benchmark::State& state) {
  std::vector<Rational> roots;
  for (long i = 1; i <= state.range(0); ++i)
    roots.push_back(Rational(Integer(2 * i - state.range(0)), Integer(3)));
  const Polynomial p = poly_from_roots(roots);
  const Rational width(Integer(1), Integer(1024));
  for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(p, width));
}
BENCHMARK(BM_IsolateRoots)->Arg(4)->Arg(8)->Arg(12);

void BM_ConditionC(benchmark::State& state) {
  const AlphaVector alpha = random_condition_c_alpha(state.range(0), Natural(9ul), 11);
  for (auto _ : state) benchmark::DoNotOptimize(check_condition_c(alpha));
}
BENCHMARK(BM_ConditionC)->Arg(2)->Arg(4)->Arg(6);

void BM_QGap(benchmark::State& state) {
  const VariableVector x = make_vector(state.range(0), 13);
  const AlphaVector alpha = random_condition_c_alpha(2, Natural(9ul), 17);
  const long k = state.range(0) / 2 + 1;
  for (auto _ : state) benchmark::DoNotOptimize(q_gap(x, alpha, k));
}
BENCHMARK(BM_QGap)->Arg(4)->Arg(8)->Arg(16);

} // namespace

BENCHMARK_MAIN();
