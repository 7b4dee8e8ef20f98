// Reference vs serial vs OpenMP kernels on the exhaustive scans.

#include <benchmark/benchmark.h>

#include "ffc/kernels.hpp"
#include "ffc/quadcensus.hpp"

using namespace ffc;

namespace {

const Field& f3() {
  static const Field F = Field::make(3);
  return F;
}

void BM_HistogramReference(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(omega_histogram_reference(f3(), n, n / 2));
}

void BM_Histogram(benchmark::State& st, Exec exec) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(omega_histogram(f3(), n, n / 2, exec));
}

void BM_SquarefreeReference(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(squarefree_count_reference(f3(), n));
}

void BM_Squarefree(benchmark::State& st, Exec exec) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(squarefree_count(f3(), n, exec));
}

void BM_CharacterSum(benchmark::State& st, Exec exec) {
  static const Field F = Field::make(8191);
  const Poly D = parse_poly(F, "5,0,3,0,0,1,0,1");
  for (auto _ : st) benchmark::DoNotOptimize(character_sum(F, D, exec));
}

void BM_QuadBruteforce(benchmark::State& st, Exec exec) {
  const int N = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(quad_count_bruteforce(f3(), N, exec));
}

}  // namespace

BENCHMARK(BM_HistogramReference)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Histogram, serial, Exec::Serial)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Histogram, parallel, Exec::Parallel)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SquarefreeReference)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Squarefree, serial, Exec::Serial)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Squarefree, parallel, Exec::Parallel)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_CharacterSum, serial, Exec::Serial)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_CharacterSum, parallel, Exec::Parallel)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_QuadBruteforce, serial, Exec::Serial)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_QuadBruteforce, parallel, Exec::Parallel)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
