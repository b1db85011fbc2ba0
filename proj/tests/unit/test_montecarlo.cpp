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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "irsout/analytic.hpp"
#include "irsout/errors.hpp"
#include "irsout/montecarlo.hpp"
#include "scenarios.hpp"

using namespace irsout;
using irsout::testing::constant_scenario;
using irsout::testing::linear_scenario;
using irsout::testing::make_scenario;

namespace {

mc::SimSpec spec(std::uint64_t samples, std::uint64_t seed = 11, unsigned workers = 1) {
    mc::SimSpec s;
    s.samples = samples;
    s.seed = seed;
    s.chunk_size = 4096;
    s.workers = workers;
    return s;
}

}  // namespace

TEST_CASE("results do not depend on the worker count") {
    const ScenarioConfig s = linear_scenario(8, 10);
    const auto one = mc::estimate_outage(s, spec(50'000, 5, 1));
    const auto four = mc::estimate_outage(s, spec(50'000, 5, 4));
    CHECK(one.user1 == four.user1);
    CHECK(one.user2 == four.user2);
    CHECK(one.system == four.system);
    const auto other_seed = mc::estimate_outage(s, spec(50'000, 6, 1));
    CHECK(other_seed.system.value != one.system.value);

    const std::vector<double> grid{0.01, 0.1, 1.0};
    CHECK(mc::empirical_cdf(s, Direction::u1_receives, spec(20'000, 5, 1), grid) ==
          mc::empirical_cdf(s, Direction::u1_receives, spec(20'000, 5, 3), grid));
}

TEST_CASE("mean cascade power") {
    for (const ScenarioConfig& s : {linear_scenario(16, 10), constant_scenario(4, 10)}) {
        double expected = 0.0;
        for (double a : pole_coefficients(s.channels, s.irs, Direction::u2_receives)) expected += 4.0 * a;
        const auto m = mc::mean_cascade_power(s, Direction::u2_receives, spec(100'000));
        CHECK(std::abs(m.value - expected) <= 5.0 * m.std_error);
    }
}

TEST_CASE("union event bounds") {
    ScenarioConfig s = linear_scenario(8, 12);
    s.user2.transmit_snr = 3.0;
    const auto e = mc::estimate_outage(s, spec(200'000));
    CHECK(e.system.value >= std::max(e.user1.value, e.user2.value));
    CHECK(e.system.value <= e.user1.value + e.user2.value);
    // The two links share no channel coefficients, so the events are independent.
    const double independent = e.user1.value + e.user2.value - e.user1.value * e.user2.value;
    CHECK(std::abs(e.system.value - independent) <= 4.0 * e.system.std_error);
}

TEST_CASE("empirical CDF within the Kolmogorov bound") {
    constexpr std::uint64_t n = 100'000;
    for (std::size_t elements : {4u, 16u, 64u}) {
        const ScenarioConfig s = linear_scenario(elements, 10);
        const auto dist = analytic::build_distribution(s, Direction::u1_receives);
        const double mean = 4.0 * std::accumulate(dist.poles.begin(), dist.poles.end(), 0.0);
        std::vector<double> grid;
        for (int k = 1; k <= 200; ++k) grid.push_back(mean * 4.0 * k / 200.0);
        const auto empirical = mc::empirical_cdf(s, Direction::u1_receives, spec(n, 21), grid);
        double worst = 0.0;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            worst = std::max(worst, std::abs(empirical[k].value - analytic::cascade_power_cdf(dist, grid[k])));
        }
        CAPTURE(elements);
        CHECK(worst <= 1.63 / std::sqrt(double(n)));
    }
}

TEST_CASE("histogram matches the density") {
    const ScenarioConfig s = constant_scenario(4, 10);
    const auto dist = analytic::build_distribution(s, Direction::u1_receives);
    const auto bins = mc::histogram_pdf(s, Direction::u1_receives, spec(200'000, 3), 40, 4.0);
    REQUIRE(bins.size() == 40);
    CHECK(bins.front().center == doctest::Approx(0.05));
    int outliers = 0;
    double mass = 0.0;
    for (const auto& bin : bins) {
        mass += bin.density.value * 0.1;
        // Bin averages differ from the midpoint density by O(width^2 p'').
        const double reference = analytic::cascade_pdf(dist, bin.center);
        if (std::abs(bin.density.value - reference) > 4.0 * bin.density.std_error + 5e-3) ++outliers;
    }
    CHECK(outliers == 0);
    CHECK(std::abs(mass - analytic::cascade_power_cdf(dist, 16.0)) <= 4.0 * std::sqrt(0.25 / 200'000.0));
}

TEST_CASE("degenerate inputs") {
    const ScenarioConfig dark = make_scenario({0.0, 0.0, 0.0}, 20);
    const auto e = mc::estimate_outage(dark, spec(1000));
    CHECK(e.user1.value == 1.0);
    CHECK(e.system.value == 1.0);
    CHECK(e.system.std_error == 0.0);

    ScenarioConfig free_rate = linear_scenario(4, 0, 0.0);
    CHECK(mc::estimate_outage(free_rate, spec(1000)).system.value == 0.0);

    CHECK_THROWS_AS(mc::estimate_outage(linear_scenario(4, 10), spec(0)), DomainError);
    const std::vector<double> bad_grid{1.0, 0.5};
    CHECK_THROWS_AS(mc::empirical_cdf(linear_scenario(4, 10), Direction::u1_receives, spec(10), bad_grid),
                    DomainError);
}

TEST_CASE("proportion") {
    const auto p = mc::proportion(25, 100);
    CHECK(p.value == 0.25);
    CHECK(p.std_error == doctest::Approx(std::sqrt(0.25 * 0.75 / 100)));
    CHECK(p.n == 100);
}
