// Serial reference against the OpenMP kernels.
//
//   ./bench_kernels --benchmark_filter=Batch

#include <benchmark/benchmark.h>

#include "genmean/kernels.hpp"
#include "genmean/lattice.hpp"
#include "genmean/summatory.hpp"

using namespace genmean;

namespace {

constexpr u64 kN = 2'000'000;

const SieveTable& table() {
  static const SieveTable t = build_sieve(kN);
  return t;
}

void BM_BatchSerial(benchmark::State& state) {
  const auto fn = static_cast<FnId>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::batch_values(fn, 2, kN, table()));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kN));
  state.SetLabel(std::string(fn_name(fn)));
}

void BM_BatchOmp(benchmark::State& state) {
  const auto fn = static_cast<FnId>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(batch_values(fn, 2, kN, table(), threads));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kN));
  state.SetLabel(std::string(fn_name(fn)));
}

void BM_Summatory(benchmark::State& state) {
  SummatoryOptions o;
  o.table = &table();
  o.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(summatory(FnId::harmonic_over_n, 2, kN, 20, true, o));
}

void BM_LcmScan(benchmark::State& state) {
  LatticeOptions o;
  o.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lattice_lcm_sum(2, 2, 1, 1000, o));
}

void BM_SieveBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_sieve(kN));
}

}  // namespace

BENCHMARK(BM_BatchSerial)->Arg(static_cast<int>(FnId::h))->Arg(static_cast<int>(FnId::harmonic_over_n))
    ->Arg(static_cast<int>(FnId::geo_logsum))->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BatchOmp)
    ->ArgsProduct({{static_cast<int>(FnId::h), static_cast<int>(FnId::harmonic_over_n),
                    static_cast<int>(FnId::geo_logsum)},
                   {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_Summatory)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LcmScan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SieveBuild)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
