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

#include "irsout/specfun.hpp"

namespace {

void BM_BesselK0(benchmark::State& state) {
    double x = 0.37;
    for (auto _ : state) {
        benchmark::DoNotOptimize(irsout::specfun::bessel_k0(x));
        x = x < 50.0 ? x * 1.01 : 0.37;
    }
}
BENCHMARK(BM_BesselK0);

void BM_BesselK1Scaled(benchmark::State& state) {
    double x = 0.37;
    for (auto _ : state) {
        benchmark::DoNotOptimize(irsout::specfun::bessel_k1_scaled(x));
        x = x < 500.0 ? x * 1.01 : 0.37;
    }
}
BENCHMARK(BM_BesselK1Scaled);

void BM_LogBesselKn(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(irsout::specfun::log_bessel_kn(n, 0.6));
}
BENCHMARK(BM_LogBesselKn)->Arg(8)->Arg(64)->Arg(256);

void BM_BesselJ0(benchmark::State& state) {
    double x = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(irsout::specfun::bessel_j0(x));
        x = x < 100.0 ? x + 0.731 : 0.5;
    }
}
BENCHMARK(BM_BesselJ0);

}  // namespace
