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
#include <numbers>

#include "irsout/errors.hpp"
#include "irsout/model.hpp"
#include "scenarios.hpp"

using namespace irsout;

TEST_CASE("snr threshold") {
    CHECK(snr_threshold(1.0) == 1.0);
    CHECK(snr_threshold(0.0) == 0.0);
    CHECK(snr_threshold(8.0) == 255.0);
    CHECK(snr_threshold(16.0) == 65535.0);
    CHECK_THROWS_AS(snr_threshold(-1.0), DomainError);
    CHECK_THROWS_AS(snr_threshold(std::nan("")), DomainError);
}

TEST_CASE("equivalent threshold") {
    UserParams u;
    u.transmit_snr = 10.0;
    u.loop_q = 1e-4;
    u.loop_v = 0.0;
    u.target_rate = 1.0;
    CHECK(equivalent_threshold(u) == doctest::Approx(0.10001).epsilon(1e-14));
    CHECK(equivalent_threshold(u, u) == doctest::Approx(equivalent_threshold(u)).epsilon(1e-14));

    UserParams clean;
    clean.transmit_snr = 100.0;
    CHECK(equivalent_threshold(clean) == doctest::Approx(0.01).epsilon(1e-14));

    SUBCASE("large-rho limits") {
        u.transmit_snr = 1e9;
        u.loop_v = 0.0;
        CHECK(equivalent_threshold(u) == doctest::Approx(1.0001e-9).epsilon(1e-12));
        u.loop_v = 1.0;
        CHECK(equivalent_threshold(u) == doctest::Approx(1e-4).epsilon(1e-4));
    }
    SUBCASE("nonincreasing in rho for v < 1") {
        u.loop_v = 0.5;
        double previous = INFINITY;
        for (double rho = 0.1; rho < 1e8; rho *= 3.0) {
            u.transmit_snr = rho;
            const double g = equivalent_threshold(u);
            CHECK(g <= previous);
            previous = g;
        }
    }
    SUBCASE("two-user form with unequal powers") {
        UserParams rx = u;
        UserParams tx = u;
        tx.transmit_snr = 40.0;
        // gamma_t (sigma_r^2 + q P_r^v) / P_t
        CHECK(equivalent_threshold(rx, tx) == doctest::Approx((1.0 + 1e-4) / 40.0).epsilon(1e-14));
    }
}

TEST_CASE("pole coefficients") {
    ChannelStats unit;
    CHECK(pole_coefficients(unit, IrsConfig{{1.0}, {0.0}}, Direction::u1_receives) == std::vector<double>{0.25});
    CHECK(pole_coefficients(unit, IrsConfig{{1.0, 0.0, 0.5}, {0, 0, 0}}, Direction::u1_receives) ==
          std::vector<double>{0.25, 0.0625});
    const auto linear = pole_coefficients(unit, IrsConfig{linear_amplitudes(4), std::vector<double>(4, 0.0)},
                                          Direction::u2_receives);
    REQUIRE(linear.size() == 4);
    CHECK(linear[0] == 1.0 / 64);
    CHECK(linear[1] == 1.0 / 16);
    CHECK(linear[2] == 9.0 / 64);
    CHECK(linear[3] == 1.0 / 4);
    CHECK_THROWS_AS(pole_coefficients(unit, IrsConfig{{0.0, 0.0}, {0, 0}}, Direction::u1_receives),
                    AllZeroAmplitudes);

    SUBCASE("direction picks the variance pair") {
        ChannelStats ch{2.0, 3.0, 5.0, 7.0};
        CHECK(pole_coefficients(ch, IrsConfig{{1.0}, {0.0}}, Direction::u1_receives)[0] == 0.25 * 3.0 * 5.0);
        CHECK(pole_coefficients(ch, IrsConfig{{1.0}, {0.0}}, Direction::u2_receives)[0] == 0.25 * 7.0 * 2.0);
    }
    SUBCASE("permutation invariance") {
        IrsConfig irs{{0.3, 0.9, 0.1, 0.6}, {0.1, 0.2, 0.3, 0.4}};
        IrsConfig permuted{{0.6, 0.1, 0.3, 0.9}, {0.4, 0.3, 0.1, 0.2}};
        auto a = pole_coefficients(unit, irs, Direction::u1_receives);
        auto b = pole_coefficients(unit, permuted, Direction::u1_receives);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("validation reports every problem") {
    ScenarioConfig s = irsout::testing::linear_scenario(4, 15.0);
    CHECK(validate(s).empty());
    CHECK_NOTHROW(require_valid(s));

    s.irs.amplitudes[2] = 1.2;
    s.user1.loop_v = 1.5;
    s.irs.phases[0] = 2 * std::numbers::pi;
    s.channels.var_gt = 0.0;
    const auto diagnostics = validate(s);
    CHECK(diagnostics.size() == 4);
    CHECK(std::count(diagnostics.begin(), diagnostics.end(), "irs.amplitudes[2] out of [0,1]") == 1);
    CHECK(std::count(diagnostics.begin(), diagnostics.end(), "user1.loop_v out of [0,1]") == 1);
    CHECK(std::count(diagnostics.begin(), diagnostics.end(), "irs.phases[0] out of [0,2pi)") == 1);
    try {
        require_valid(s);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.diagnostics() == diagnostics);
    }

    ScenarioConfig mismatched = irsout::testing::linear_scenario(4, 15.0);
    mismatched.irs.phases.pop_back();
    CHECK(validate(mismatched).size() == 1);
}

TEST_CASE("profiles and phases") {
    CHECK(linear_amplitudes(4) == std::vector<double>{0.25, 0.5, 0.75, 1.0});
    CHECK(constant_amplitudes(3) == std::vector<double>{1.0, 1.0, 1.0});
    const auto p = random_phases(1000, 9);
    CHECK(p == random_phases(1000, 9));
    CHECK(p != random_phases(1000, 10));
    CHECK(std::all_of(p.begin(), p.end(), [](double x) { return x >= 0.0 && x < 2 * std::numbers::pi; }));
    // Prefix stability: the first k phases do not depend on n.
    const auto q = random_phases(10, 9);
    CHECK(std::equal(q.begin(), q.end(), p.begin()));
}

TEST_CASE("direction names") {
    CHECK(direction_from_string(to_string(Direction::u1_receives)) == Direction::u1_receives);
    CHECK(direction_from_string(to_string(Direction::u2_receives)) == Direction::u2_receives);
    CHECK_THROWS_AS(direction_from_string("u3"), DomainError);
}
