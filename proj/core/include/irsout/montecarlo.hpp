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

// Monte Carlo simulation of the two cascade channels.
//
// Samples are split into fixed-size chunks; chunk c draws from the Philox
// substream keyed by (seed, c), and per-chunk tallies are reduced in chunk
// order. Results therefore depend on (seed, samples, chunk_size) only, never
// on the number of worker threads.

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "irsout/model.hpp"
#include "irsout/philox.hpp"

namespace irsout::mc {

struct SimSpec {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    std::uint64_t chunk_size = 65'536;
    unsigned workers = 0;  ///< 0 = hardware concurrency
};

/// Point estimate with its standard error over n realizations.
struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t n = 0;

    bool operator==(const Estimate&) const = default;
};

/// Proportion k/n with standard error sqrt(p (1 - p) / n).
Estimate proportion(std::uint64_t hits, std::uint64_t n);

struct OutageEstimates {
    Estimate user1;
    Estimate user2;
    Estimate system;  ///< union event counted on the same realizations
};

struct HistogramBin {
    double center;
    Estimate density;
};

/// One realization of the cascade coefficient for the receiving user,
/// including the IRS phases.
std::complex<double> sample_cascade(const ScenarioConfig& scenario, Direction direction,
                                    NormalStream& stream);

/// Outage events {gamma_1 < gamma_t1}, {gamma_2 < gamma_t2} and their union,
/// with the loop residual q P^v added to the receiver noise.
OutageEstimates estimate_outage(const ScenarioConfig& scenario, const SimSpec& spec);

/// Fraction of realizations with |z|^2 <= xi at each grid point; one sample
/// set is shared across the grid. Grid must be nondecreasing and nonnegative.
std::vector<Estimate> empirical_cdf(const ScenarioConfig& scenario, Direction direction,
                                    const SimSpec& spec, std::span<const double> grid);

/// Histogram of |z| on [0, r_max] in density units count / (n * width).
std::vector<HistogramBin> histogram_pdf(const ScenarioConfig& scenario, Direction direction,
                                        const SimSpec& spec, std::size_t bins, double r_max);

/// Sample mean of |z|^2 with its standard error.
Estimate mean_cascade_power(const ScenarioConfig& scenario, Direction direction, const SimSpec& spec);

}  // namespace irsout::mc
