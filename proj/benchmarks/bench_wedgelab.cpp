#include <benchmark/benchmark.h>

#include "wedgelab/automorphisms.hpp"
#include "wedgelab/constructors.hpp"
#include "wedgelab/functors.hpp"
#include "wedgelab/isoscope.hpp"
#include "wedgelab/presentation.hpp"
#include "wedgelab/wedge.hpp"

using namespace wedgelab;

static void BM_RealizeHolder(benchmark::State& state) {
  const auto p = holder_presentation(state.range(0), state.range(1), state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(realize(p)->order());
}
BENCHMARK(BM_RealizeHolder)->Args({4, 5, 3})->Args({6, 9, 2})->Args({16, 17, 3});

static void BM_WedgeAbelian(benchmark::State& state) {
  const auto g = abelian({state.range(0), state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(wedge_abelian(g).w->order());
}
BENCHMARK(BM_WedgeAbelian)->Arg(4)->Arg(16)->Arg(64);

static void BM_WedgeHopf(benchmark::State& state) {
  const auto g = group_from_descriptor(state.range(0) ? "sym4" : "quaternion:16");
  for (auto _ : state) benchmark::DoNotOptimize(wedge_hopf(g).w->order());
}
BENCHMARK(BM_WedgeHopf)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_WedgeGeneric(benchmark::State& state) {
  const auto g = dihedral(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wedge_generic(g).w->order());
}
BENCHMARK(BM_WedgeGeneric)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_TauMul(benchmark::State& state) {
  const auto t = tau(wedge_abelian(abelian({state.range(0), state.range(0)})));
  const Elem n = static_cast<Elem>(t->order());
  Elem x = 1, acc = 0;
  for (auto _ : state) {
    acc = t->mul(acc, x);
    x = (x * 7919 + 1) % n;
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_TauMul)->Arg(4)->Arg(8);

static void BM_HasAiHolder(benchmark::State& state) {
  const auto g = holder(state.range(0), state.range(1), state.range(2));
  const auto budget = AutSearchBudget::from(Budgets::defaults(), SearchMode::FindOne);
  for (auto _ : state) benchmark::DoNotOptimize(has_ai(g, budget).answer);
}
BENCHMARK(BM_HasAiHolder)->Args({4, 5, 3})->Args({9, 7, 2})->Args({5, 11, 3});

static void BM_Fingerprint(benchmark::State& state) {
  const auto t = tau(wedge_abelian(abelian({state.range(0), state.range(0)})));
  for (auto _ : state) benchmark::DoNotOptimize(fingerprint(t).hash());
}
BENCHMARK(BM_Fingerprint)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
