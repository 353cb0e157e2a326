// Serial reference sampler against the OpenMP sampler on the same workload.
#include "bergman/domain.hpp"
#include "bergman/verify.hpp"

#include <benchmark/benchmark.h>

using namespace bergman;

namespace {

void run_volume(benchmark::State& state, ExecPolicy policy, const DomainSpec& spec) {
  McRun run;
  run.samples = static_cast<std::uint64_t>(state.range(0));
  run.policy = policy;
  for (auto _ : state) benchmark::DoNotOptimize(mc_volume(spec, run).value);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_volume_serial(benchmark::State& s) { run_volume(s, ExecPolicy::serial, DomainSpec::type_I(2, 2)); }
void BM_volume_parallel(benchmark::State& s) { run_volume(s, ExecPolicy::parallel, DomainSpec::type_I(2, 2)); }
void BM_volume_vi_serial(benchmark::State& s) { run_volume(s, ExecPolicy::serial, DomainSpec::type_VI()); }
void BM_volume_vi_parallel(benchmark::State& s) { run_volume(s, ExecPolicy::parallel, DomainSpec::type_VI()); }

} // namespace

BENCHMARK(BM_volume_serial)->Arg(100'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_volume_parallel)->Arg(100'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_volume_vi_serial)->Arg(20'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_volume_vi_parallel)->Arg(20'000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
