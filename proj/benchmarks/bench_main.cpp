#include <benchmark/benchmark.h>

#include "bandhs/bandhs.hpp"

namespace {

using namespace bandhs;

Instance make_instance(Var vars, std::uint64_t seed) {
  Rng rng(seed);
  GeneratorSpec spec;
  spec.num_vars = vars;
  spec.num_hard = vars * 2;
  spec.num_soft = vars * 6;
  spec.min_len = 2;
  spec.max_len = 3;
  spec.max_weight = 100;
  return generate_instance(spec, rng).instance;
}

void BM_Flip(benchmark::State& st) {
  const Instance inst = make_instance(static_cast<Var>(st.range(0)), 1);
  Rng rng(2);
  SearchState s(inst, Assignment(inst.num_vars()));
  for (auto _ : st) {
    s.flip(static_cast<Var>(rng.between(1, inst.num_vars())));
    benchmark::DoNotOptimize(s.cost());
  }
  st.SetItemsProcessed(st.iterations());
}
BENCHMARK(BM_Flip)->Arg(60)->Arg(1000)->Arg(20000);

void BM_Hydeci(benchmark::State& st) {
  const Instance inst = make_instance(static_cast<Var>(st.range(0)), 3);
  Rng rng(4);
  for (auto _ : st) benchmark::DoNotOptimize(hydeci(inst, rng));
}
BENCHMARK(BM_Hydeci)->Arg(60)->Arg(1000)->Arg(20000);

void BM_SolveSteps(benchmark::State& st) {
  const Instance inst = make_instance(static_cast<Var>(st.range(0)), 5);
  Params p;
  p.max_steps = 100000;
  for (auto _ : st) {
    const RunResult r = solve(inst, p);
    benchmark::DoNotOptimize(r.best_cost);
  }
  st.SetItemsProcessed(st.iterations() * 100000);
}
BENCHMARK(BM_SolveSteps)->Arg(60)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
