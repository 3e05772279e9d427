#include <benchmark/benchmark.h>

#include "kbp/certify.hpp"
#include "kbp/construct.hpp"
#include "kbp/transforms.hpp"

namespace {

using kbp::Exec;

const kbp::construct::ConstructionResult& worked_example() {
  static const auto r = kbp::construct::build_g({kbp::DimPair(4, 2), 0.5, 0.0625,
                                                 kbp::construct::Variant::parabola});
  return r;
}

void dual_grid(benchmark::State& state, Exec exec) {
  const kbp::transforms::TransformSpec spec(4, 2);
  const auto grid = kbp::transforms::uniform_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kbp::transforms::dual_grid(spec, worked_example().g, grid, exec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void moment_scan(benchmark::State& state, Exec exec) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kbp::certify::moment_scan(kbp::DimPair(4, 2), worked_example().g, degree, exec));
  }
  state.SetItemsProcessed(state.iterations() * (state.range(0) + 1));
}

}  // namespace

BENCHMARK_CAPTURE(dual_grid, serial, Exec::serial)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(dual_grid, parallel, Exec::parallel)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(moment_scan, serial, Exec::serial)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(moment_scan, parallel, Exec::parallel)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
