#include <benchmark/benchmark.h>

#include "gpd/burnside.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/groups.hpp"
#include "gpd/laws.hpp"

namespace {

const char* const kSuites[] = {"pentagon", "triangle", "round-trip", "compat", "canonical"};

void laws(benchmark::State& state, gpd::Execution exec) {
  const char* suite = kSuites[state.range(0)];
  const auto cases = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    const gpd::SuiteReport r = gpd::run_suite(suite, 7, cases, exec);
    if (r.failures()) state.SkipWithError("suite failed");
    benchmark::DoNotOptimize(r.cases.data());
  }
  state.SetLabel(suite);
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_LawsSerial(benchmark::State& state) { laws(state, gpd::Execution::Serial); }
void BM_LawsParallel(benchmark::State& state) { laws(state, gpd::Execution::Parallel); }

void suites(benchmark::internal::Benchmark* b) {
  for (int s = 0; s < 5; ++s) b->Args({s, 32});
  b->Unit(benchmark::kMillisecond);
}

BENCHMARK(BM_LawsSerial)->Apply(suites);
BENCHMARK(BM_LawsParallel)->Apply(suites);

void BM_BurnsideGroup(benchmark::State& state) {
  const auto g = gpd::share(gpd::from_group(gpd::symmetric_group(static_cast<std::uint32_t>(state.range(0))).cayley()));
  const auto one = gpd::share(gpd::discrete_groupoid(1));
  for (auto _ : state) benchmark::DoNotOptimize(gpd::burnside_group(g, one, g->num_morphisms()));
}

BENCHMARK(BM_BurnsideGroup)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
