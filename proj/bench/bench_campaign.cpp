// Serial reference against the OpenMP path for the heavier campaigns.
//
//   ./spinorlab_bench --benchmark_counters_tabular=true

#include <benchmark/benchmark.h>

#include "spinorlab/campaign.hpp"

using namespace spinorlab;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "openmp");
}

void BM_Fpk(benchmark::State& state) {
  for (auto _ : state) {
    const Tally t = sweep(20000, exec_of(state), [](std::uint64_t i) {
      DrawRng r(0, static_cast<std::uint64_t>(Stream::Raw), i);
      const double v = fpk_residuals(bilinear_set(draw_raw(r))).max_abs();
      return std::pair{v, v < 1e-10};
    });
    benchmark::DoNotOptimize(t.max);
  }
  state.SetItemsProcessed(state.iterations() * 20000);
  label(state);
}
BENCHMARK(BM_Fpk)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Sample(benchmark::State& state) {
  const auto family = static_cast<SampleFamily>(state.range(1));
  for (auto _ : state) {
    const SampleStats s = run_sample(family, 1, 5000, {}, {}, {}, exec_of(state));
    benchmark::DoNotOptimize(s.draws);
  }
  state.SetItemsProcessed(state.iterations() * 5000);
  state.SetLabel(std::string(state.range(0) == 0 ? "serial " : "openmp ") + to_string(family));
}
BENCHMARK(BM_Sample)
    ->ArgsProduct({{0, 1},
                   {static_cast<int>(SampleFamily::RandomRaw),
                    static_cast<int>(SampleFamily::DualHelicity)}})
    ->Unit(benchmark::kMillisecond);

void BM_Suite(benchmark::State& state) {
  SuiteOptions opt;
  opt.exec = exec_of(state);
  opt.draws = 2000;
  for (auto _ : state) {
    const auto results = run_property_suite(opt);
    benchmark::DoNotOptimize(results.size());
  }
  label(state);
}
BENCHMARK(BM_Suite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
