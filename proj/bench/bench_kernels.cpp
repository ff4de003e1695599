// Serial reference against OpenMP kernels on the scans that dominate
// validation: associativity, homomorphism checks and crossed-module axioms.

#include <benchmark/benchmark.h>

#include "xmod/catalog.hpp"
#include "xmod/crossed_module.hpp"
#include "xmod/kernels.hpp"

using namespace xmod;
using kernels::Exec;

namespace {

GroupPtr bench_group(std::int64_t n) {
  // S4, S5 and the order-240 product S5 x C2.
  if (n == 24) return symmetric_group(4);
  if (n == 120) return symmetric_group(5);
  return product_group(symmetric_group(5), cyclic_group(2));
}

Exec exec_of(const benchmark::State& s) { return s.range(1) ? Exec::parallel : Exec::serial; }

void BM_associativity(benchmark::State& state) {
  auto g = bench_group(state.range(0));
  const Exec e = exec_of(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::find_associativity_failure(g->table(), g->order(), e));
  state.SetLabel(e == Exec::parallel ? "parallel" : "serial");
}

void BM_hom_check(benchmark::State& state) {
  auto g = bench_group(state.range(0));
  std::vector<std::uint32_t> id(g->order());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<std::uint32_t>(i);
  const Exec e = exec_of(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        kernels::find_hom_failure(g->table(), g->order(), g->table(), g->order(), id, e));
  state.SetLabel(e == Exec::parallel ? "parallel" : "serial");
}

void BM_xmod_axioms(benchmark::State& state) {
  auto g = bench_group(state.range(0));
  auto x = identity_xmod(g);
  const Exec e = exec_of(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(CrossedModule::make(x.boundary(), x.action(), e));
  state.SetLabel(e == Exec::parallel ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_associativity)->ArgsProduct({{24, 120, 240}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hom_check)->ArgsProduct({{120, 240}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_xmod_axioms)->ArgsProduct({{120, 240}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
