// Serial reference kernels against their OpenMP counterparts on a few rings of growing order.
// Run with --benchmark_filter to pick a kernel; OMP_NUM_THREADS controls the parallel side.

#include <benchmark/benchmark.h>

#include <vector>

#include "zlocal/compile.hpp"
#include "zlocal/kernels.hpp"

using namespace zlocal;

namespace {

FiniteRing make_ring(int which) {
  PresentationParams p;
  p.family = Family::F3;
  p.p = 2;
  p.g = "x^2+x+1";
  // Orders 64, 256 and 1024.
  p.m = static_cast<unsigned>(which + 1);
  return compile(build_presentation(p));
}

const FiniteRing& ring(int which) {
  static const std::vector<FiniteRing> rings = {make_ring(0), make_ring(1), make_ring(2)};
  return rings[static_cast<std::size_t>(which)];
}

template <auto Kernel>
void run(benchmark::State& state) {
  const FiniteRing& R = ring(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(R));
  state.counters["order"] = static_cast<double>(R.order());
}

}  // namespace

BENCHMARK(run<kernels::serial::scan_units>)->Name("scan_units/serial")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(run<kernels::omp::scan_units>)->Name("scan_units/omp")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(run<kernels::serial::nilpotency_index>)->Name("nilpotency/serial")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(run<kernels::omp::nilpotency_index>)->Name("nilpotency/omp")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(run<kernels::serial::minpoly_degree>)->Name("minpoly_degree/serial")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(run<kernels::omp::minpoly_degree>)->Name("minpoly_degree/omp")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
// The serial triple check is cubic in the order, so it is only timed on the smallest ring.
BENCHMARK(run<kernels::serial::check_axioms>)->Name("check_axioms/serial")->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(run<kernels::omp::check_axioms>)->Name("check_axioms/omp")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
