// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hetnet/campaign.hpp"
#include "hetnet/cell_selection.hpp"
#include "hetnet/metrics.hpp"
#include "hetnet/rng.hpp"
#include "hetnet/uplink_state.hpp"
#include "hetnet/units.hpp"

namespace {

using namespace hetnet;

Scenario scenario_with(std::size_t picos) {
  Scenario s;
  s.picos_per_sector = picos;
  return s;
}

void BM_MakeDrop(benchmark::State& state) {
  const Scenario s = scenario_with(static_cast<std::size_t>(state.range(0)));
  std::size_t d = 0;
  for (auto _ : state) benchmark::DoNotOptimize(make_drop(s, d++));
}
BENCHMARK(BM_MakeDrop)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_InterferenceSelection(benchmark::State& state) {
  const Scenario s = scenario_with(static_cast<std::size_t>(state.range(0)));
  const Drop drop = make_drop(s, 0);
  const UplinkNetwork net{drop.gains, s.power(0.8), s.sched, s.noise.per_rb_noise_mw(),
                          drop.preferred_block};
  const StrategyConfig cfg = StrategyConfig::parse("interference");
  for (auto _ : state) benchmark::DoNotOptimize(select_interference_based(net, cfg));
}
BENCHMARK(BM_InterferenceSelection)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_StateBuild(benchmark::State& state) {
  const Scenario s = scenario_with(2);
  const Drop drop = make_drop(s, 0);
  const UplinkNetwork net{drop.gains, s.power(0.8), s.sched, s.noise.per_rb_noise_mw(),
                          drop.preferred_block};
  const Assignment a = select_rsrp(drop.gains);
  for (auto _ : state) benchmark::DoNotOptimize(UplinkState::build(net, a.serving));
}
BENCHMARK(BM_StateBuild)->Unit(benchmark::kMicrosecond);

void BM_WidebandSinr(benchmark::State& state) {
  Rng rng = make_rng(5, Stream::kUsers);
  std::uniform_real_distribution<double> db(-20.0, 30.0);
  std::vector<double> v(static_cast<std::size_t>(state.range(0)));
  for (double& x : v) x = db_to_linear(db(rng));
  for (auto _ : state) benchmark::DoNotOptimize(wideband_sinr(v));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WidebandSinr)->Arg(48)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
