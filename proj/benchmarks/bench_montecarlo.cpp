/*
   Copyright 2026 The irsout Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "irsout/model.hpp"
#include "irsout/montecarlo.hpp"
#include "irsout/philox.hpp"

namespace {

void BM_NormalStream(benchmark::State& state) {
    irsout::NormalStream stream(1, 0);
    for (auto _ : state) benchmark::DoNotOptimize(stream.complex_normal(1.0));
}
BENCHMARK(BM_NormalStream);

void BM_EstimateOutage(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    irsout::ScenarioConfig s;
    s.irs.amplitudes = irsout::linear_amplitudes(n);
    s.irs.phases = irsout::random_phases(n, 7);
    for (irsout::UserParams* u : {&s.user1, &s.user2}) {
        u->transmit_snr = 30.0;
        u->target_rate = 1.0;
    }
    irsout::mc::SimSpec spec;
    spec.samples = 100'000;
    spec.workers = 1;
    for (auto _ : state) benchmark::DoNotOptimize(irsout::mc::estimate_outage(s, spec));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(spec.samples));
}
BENCHMARK(BM_EstimateOutage)->Arg(4)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
