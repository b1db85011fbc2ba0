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

// Scenario files.
//
//   {
//     "irs": {"n": 16, "amplitudes": "linear" | "constant" | [...],
//             "phases": "random" | [...], "phase_seed": 7},
//     "channels": {"var_ht": 1, "var_hr": 1, "var_gt": 1, "var_gr": 1},
//     "users": [{"rho_db": 20, "noise_var": 1, "rate": 1, "loop_q": 1e-4, "loop_v": 0},
//               {...}]
//   }
//
// "linear" expands to |theta_i| = i/N and "constant" to all ones; both are
// re-expanded whenever N changes. A user may give the linear "rho" instead
// of "rho_db"; the echoed form uses "rho" so it re-parses bit-identically.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "irsout/model.hpp"

namespace irsout {

enum class AmplitudeProfile { constant, linear, explicit_values };
enum class PhaseProfile { random, explicit_values };

struct ScenarioDefinition {
    std::size_t n = 1;
    AmplitudeProfile amplitude_profile = AmplitudeProfile::constant;
    std::vector<double> amplitudes;  ///< only for explicit_values
    PhaseProfile phase_profile = PhaseProfile::random;
    std::vector<double> phases;      ///< only for explicit_values
    std::uint64_t phase_seed = 0;
    ChannelStats channels;
    UserParams user1;
    UserParams user2;

    /// Concrete scenario at the current n. Does not validate.
    ScenarioConfig expand() const;

    /// Same definition at a different element count. Throws DomainError for
    /// explicit amplitude or phase arrays, which cannot be resized.
    ScenarioDefinition with_elements(std::size_t elements) const;
};

/// Parses and validates; throws ValidationError listing every problem found.
ScenarioDefinition parse_scenario(std::string_view json_text);
ScenarioDefinition load_scenario(const std::filesystem::path& path);

/// Explicit-array JSON form of a concrete scenario.
std::string scenario_to_json(const ScenarioConfig& scenario);

/// FNV-1a 64 of scenario_to_json, as 16 hex digits.
std::string scenario_digest(const ScenarioConfig& scenario);

double db_to_linear(double db);

}  // namespace irsout
