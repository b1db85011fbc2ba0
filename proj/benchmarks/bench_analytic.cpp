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

#include <vector>

#include "irsout/analytic.hpp"
#include "irsout/model.hpp"

namespace {

std::vector<double> linear_poles(std::size_t n) {
    std::vector<double> poles;
    for (double a : irsout::linear_amplitudes(n)) poles.push_back(0.25 * a * a);
    return poles;
}

// Building includes the extended-precision coefficients, so the cost tracks
// the working precision chosen for N.
void BM_BuildLinear(benchmark::State& state) {
    const auto poles = linear_poles(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(irsout::analytic::build_distribution(poles));
}
BENCHMARK(BM_BuildLinear)->Arg(4)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_CdfLinear(benchmark::State& state) {
    const auto dist = irsout::analytic::build_distribution(linear_poles(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(irsout::analytic::cascade_power_cdf(dist, 0.05));
}
BENCHMARK(BM_CdfLinear)->Arg(4)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_CdfConstant(benchmark::State& state) {
    const auto dist =
        irsout::analytic::build_distribution(std::vector<double>(static_cast<std::size_t>(state.range(0)), 0.25));
    const double xi = static_cast<double>(state.range(1)) / 100.0;
    for (auto _ : state) benchmark::DoNotOptimize(irsout::analytic::cascade_power_cdf(dist, xi));
}
// The first argument pair lands in the quadrature lower tail, the second in the closed form.
BENCHMARK(BM_CdfConstant)->Args({64, 1})->Args({64, 2000})->Unit(benchmark::kMicrosecond);

}  // namespace
