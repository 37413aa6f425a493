#include <benchmark/benchmark.h>

#include "isogeny/dlmv.hpp"
#include "isogeny/supersets.hpp"

using namespace isogeny;

static void BM_ConditionCC(benchmark::State& state) {
  const QuadField F = QuadField::make(5);
  std::uint64_t p = 1'000'003;  // 3 mod 4
  for (auto _ : state) {
    benchmark::DoNotOptimize(condition_cc(F, p));
    p += 4;
  }
}
BENCHMARK(BM_ConditionCC);

// Condition CC scan to 5*10^7 in 2^20-wide chunks; the argument is the thread count.
static void BM_Sieve(benchmark::State& state) {
  const QuadField F = QuadField::make(5);
  SieveOptions opt;
  opt.cap = 50'000'000;
  opt.chunk_size = 1u << 20;
  opt.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sieve(F, opt));
}
BENCHMARK(BM_Sieve)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_NormIntegers(benchmark::State& state) {
  const QuadField F = QuadField::make(-10);
  const ClassGroup G(F);
  const AuxPrime aux = make_aux_prime(G, 7);
  for (auto _ : state) benchmark::DoNotOptimize(norm_integers(F, {4, 8}, aux));
}
BENCHMARK(BM_NormIntegers);

static void BM_ClassGroup(benchmark::State& state) {
  const std::int64_t D = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(ClassGroup(QuadField::make(D)).class_number());
}
BENCHMARK(BM_ClassGroup)->Arg(-31159)->Arg(2036079533)->Unit(benchmark::kMillisecond);

static void BM_Dlmv(benchmark::State& state) {
  const QuadField F = QuadField::make(10);
  for (auto _ : state) benchmark::DoNotOptimize(dlmv_bound(F));
}
BENCHMARK(BM_Dlmv)->Unit(benchmark::kMicrosecond);

static void BM_AssembleCapped(benchmark::State& state) {
  SupersetConfig c;
  c.type_two_cap = 1'000'000;
  c.threads = 4;
  const QuadField F = QuadField::make(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(assemble(F, c));
}
BENCHMARK(BM_AssembleCapped)->Arg(5)->Arg(-10)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
