// Serial reference against OpenMP variants of the hot loops.

#include <benchmark/benchmark.h>

#include "dix/kernels.hpp"
#include "dix/springer.hpp"
#include "dix/weyl_action.hpp"

using namespace dix;

namespace {

kernels::Exec exec_of(const benchmark::State& state) {
  return state.range(0) ? kernels::Exec::Parallel : kernels::Exec::Serial;
}

void BM_OrbitTranslates(benchmark::State& state) {
  const RootDatum d = build_root_datum(GroupId::so_even_odd(2, 2));
  const auto ws = weyl_elements(d, WhichGroup::G);
  const MultiPoly p = weyl_dim_poly(d);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::orbit_translates(p, ws, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(ws.size()));
}
BENCHMARK(BM_OrbitTranslates)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SignedPowerSums(benchmark::State& state) {
  std::vector<Rational> values;
  std::vector<int> signs;
  for (int k = 0; k < 5000; ++k) {
    values.push_back(make_rational(k % 97 - 48, 1 + k % 7));
    signs.push_back(k % 3 ? 1 : -1);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::signed_power_sums(values, signs, 12, exec_of(state)));
  }
}
BENCHMARK(BM_SignedPowerSums)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_OrbitSpan(benchmark::State& state) {
  const RootDatum d = build_root_datum(GroupId::sp_pq(2, 2));
  const auto ws = weyl_elements(d, WhichGroup::G);
  const MultiPoly p = weyl_dim_poly(d);
  for (auto _ : state) benchmark::DoNotOptimize(orbit_span(p, ws, {}, exec_of(state)).dim());
}
BENCHMARK(BM_OrbitSpan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SpringerTable(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(springer::springer_table(5, springer::all_families(), exec_of(state)));
  }
}
BENCHMARK(BM_SpringerTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
