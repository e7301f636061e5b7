#include <benchmark/benchmark.h>

#include <cstdint>

#include "mertens/divisor_classes.hpp"
#include "mertens/matrix_builders.hpp"
#include "mertens/mertens_sieve.hpp"
#include "mertens/quotient_algebra.hpp"
#include "mertens/spectral.hpp"

namespace {

using namespace mertens;

void BM_Sieve(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(MertensTable::build(state.range(0)));
  }
}
BENCHMARK(BM_Sieve)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_BuildM(benchmark::State& state) {
  const MertensTable table = MertensTable::build(state.range(0));
  const ClassStructure cs(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_M_direct(cs, table));
  }
}
BENCHMARK(BM_BuildM)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_RegularRepresentation(benchmark::State& state) {
  const QuotientAlgebra algebra(state.range(0));
  const MertensTable table = MertensTable::build(state.range(0));
  const QuotientVector mu = project_mobius(algebra, table);
  for (auto _ : state) {
    benchmark::DoNotOptimize(algebra.regular_representation(mu));
  }
}
BENCHMARK(BM_RegularRepresentation)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_PowerNorm(benchmark::State& state) {
  const MertensTable table = MertensTable::build(state.range(0));
  const IntegerMatrix m = build_M_direct(ClassStructure(state.range(0)), table);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral_norm_power(m));
  }
}
BENCHMARK(BM_PowerNorm)->Arg(10'000)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_DenseNorm(benchmark::State& state) {
  const MertensTable table = MertensTable::build(state.range(0));
  const IntegerMatrix m = build_M_direct(ClassStructure(state.range(0)), table);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral_norm_dense(m));
  }
}
BENCHMARK(BM_DenseNorm)->Arg(1'000)->Arg(10'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
