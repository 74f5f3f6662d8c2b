// Serial reference vs OpenMP versions of the heavy kernels.

#include <benchmark/benchmark.h>

#include "tworoots/kernels.hpp"

using namespace tworoots;

namespace {

const CanonicalBasis& e8() {
  static const CanonicalBasis b = CanonicalBasis::build(Diagram::y(1, 2, 4));
  return b;
}

std::vector<IntMatrix> e8_elements() {
  std::vector<IntMatrix> out;
  for (const auto& e : e8().elements()) out.push_back(e.s);
  return out;
}

void BM_gram_serial(benchmark::State& st) {
  const auto elems = e8_elements();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::gram_serial(e8().cartan(), elems));
}
void BM_gram_parallel(benchmark::State& st) {
  const auto elems = e8_elements();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::gram_parallel(e8().cartan(), elems));
}

void BM_sweep_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::coherence_sweep_serial(e8(), st.range(0), 30, 1));
}
void BM_sweep_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::coherence_sweep_parallel(e8(), st.range(0), 30, 1));
}

// D6 acting on the canonical basis: |W(D6)| = 23040 elements
void BM_closure_serial(benchmark::State& st) {
  const auto gens = generator_matrices(CanonicalBasis::build(Diagram::y(1, 1, 3)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::closure_size_serial(gens, 1'000'000));
}
void BM_closure_parallel(benchmark::State& st) {
  const auto gens = generator_matrices(CanonicalBasis::build(Diagram::y(1, 1, 3)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::closure_size_parallel(gens, 1'000'000));
}

}  // namespace

BENCHMARK(BM_gram_serial);
BENCHMARK(BM_gram_parallel);
BENCHMARK(BM_sweep_serial)->Arg(1000);
BENCHMARK(BM_sweep_parallel)->Arg(1000);
BENCHMARK(BM_closure_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_closure_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
