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
#include <string>

#include "irsout/errors.hpp"
#include "irsout/scenario_io.hpp"
#include "scenarios.hpp"

using namespace irsout;

namespace {

constexpr const char* kStockScenario = R"({
  "irs": {"n": 16, "amplitudes": "linear", "phases": "random", "phase_seed": 3},
  "users": [{"rho_db": 20, "rate": 1, "loop_q": 1e-4, "loop_v": 0},
            {"rho_db": 20, "rate": 1, "loop_q": 1e-4, "loop_v": 0}]
})";

std::vector<std::string> diagnostics_of(const std::string& text) {
    try {
        parse_scenario(text);
    } catch (const ValidationError& e) {
        return e.diagnostics();
    }
    return {};
}

bool mentions(const std::vector<std::string>& diagnostics, const std::string& needle) {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [&](const std::string& d) { return d.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("stock scenario parses with defaults") {
    const ScenarioDefinition def = parse_scenario(kStockScenario);
    CHECK(def.n == 16);
    CHECK(def.amplitude_profile == AmplitudeProfile::linear);
    CHECK(def.phase_profile == PhaseProfile::random);
    CHECK(def.phase_seed == 3);
    CHECK(def.channels == ChannelStats{});
    CHECK(def.user1.transmit_snr == doctest::Approx(100.0).epsilon(1e-15));
    CHECK(def.user1.noise_var == 1.0);
    const ScenarioConfig s = def.expand();
    CHECK(s.irs.amplitudes == linear_amplitudes(16));
    CHECK(s.irs.phases == random_phases(16, 3));
    CHECK(validate(s).empty());
}

TEST_CASE("every problem is reported at once") {
    const auto d = diagnostics_of(R"({
      "irs": {"n": 3, "amplitudes": [0.5, 1.0], "phases": "sometimes"},
      "users": [{"rho_db": 10, "rho": 10}, {"rate": -1}]
    })");
    CHECK(d.size() >= 4);
    CHECK(mentions(d, "irs.n = 3"));
    CHECK(mentions(d, "irs.phases"));
    CHECK(mentions(d, "users[0]"));
    CHECK(mentions(d, "users[1]"));
}

TEST_CASE("semantic validation runs after parsing") {
    const auto d = diagnostics_of(R"({
      "irs": {"amplitudes": [0.5, 1.2], "phases": [0, 7]},
      "users": [{"rho_db": 10, "rate": 1, "loop_v": 1.5}, {"rho_db": 10, "rate": 1}]
    })");
    CHECK(mentions(d, "irs.amplitudes[1] out of [0,1]"));
    CHECK(mentions(d, "irs.phases[1] out of [0,2pi)"));
    CHECK(mentions(d, "user1.loop_v out of [0,1]"));
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_scenario("{not json"), ValidationError);
    CHECK_THROWS_AS(parse_scenario("[1, 2]"), ValidationError);
    CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.json"), ValidationError);
    CHECK(mentions(diagnostics_of(R"({"irs": {"amplitudes": "linear"}, "users": []})"), "irs.n"));
}

TEST_CASE("echoed scenario round-trips exactly") {
    for (const ScenarioConfig& s :
         {parse_scenario(kStockScenario).expand(), irsout::testing::make_scenario({0.1, 0.7, 0.35}, 13.3, 2.5, 3e-3, 0.4)}) {
        const std::string text = scenario_to_json(s);
        const ScenarioConfig back = parse_scenario(text).expand();
        CHECK(back == s);
        CHECK(scenario_to_json(back) == text);
        CHECK(scenario_digest(back) == scenario_digest(s));
    }
}

TEST_CASE("digest tracks content") {
    ScenarioConfig s = parse_scenario(kStockScenario).expand();
    const std::string d = scenario_digest(s);
    CHECK(d.size() == 16);
    s.user2.target_rate = 2.0;
    CHECK(scenario_digest(s) != d);
}

TEST_CASE("profiles re-expand at a new element count") {
    const ScenarioDefinition def = parse_scenario(kStockScenario);
    const ScenarioConfig s8 = def.with_elements(8).expand();
    CHECK(s8.irs.amplitudes == linear_amplitudes(8));
    CHECK(s8.irs.phases.size() == 8);
    const ScenarioDefinition fixed = parse_scenario(R"({
      "irs": {"amplitudes": [0.5, 1.0], "phases": [0, 1]},
      "users": [{"rho_db": 10, "rate": 1}, {"rho_db": 10, "rate": 1}]
    })");
    CHECK(fixed.n == 2);
    CHECK_THROWS_AS(fixed.with_elements(4), DomainError);
    CHECK_THROWS_AS(def.with_elements(0), DomainError);
}

TEST_CASE("db conversion") {
    CHECK(db_to_linear(0.0) == 1.0);
    CHECK(db_to_linear(20.0) == doctest::Approx(100.0).epsilon(1e-15));
    CHECK(db_to_linear(-10.0) == doctest::Approx(0.1).epsilon(1e-15));
}
