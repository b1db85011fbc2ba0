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

#pragma once

#include <cstddef>
#include <cstdint>

#include "irsout/model.hpp"
#include "irsout/scenario_io.hpp"

namespace irsout::testing {

/// Unit variances and noise, equal rho for both users, loop residual q P^v.
inline ScenarioConfig make_scenario(std::vector<double> amplitudes, double rho_db, double rate = 1.0,
                                    double loop_q = 1e-4, double loop_v = 0.0, std::uint64_t phase_seed = 7) {
    ScenarioConfig s;
    const std::size_t n = amplitudes.size();
    s.irs.amplitudes = std::move(amplitudes);
    s.irs.phases = random_phases(n, phase_seed);
    for (UserParams* u : {&s.user1, &s.user2}) {
        u->transmit_snr = db_to_linear(rho_db);
        u->noise_var = 1.0;
        u->target_rate = rate;
        u->loop_q = loop_q;
        u->loop_v = loop_v;
    }
    return s;
}

/// Linear profile |theta_i| = i/N with the stock loop residual.
inline ScenarioConfig linear_scenario(std::size_t n, double rho_db, double rate = 1.0, double loop_v = 0.0) {
    return make_scenario(linear_amplitudes(n), rho_db, rate, 1e-4, loop_v);
}

inline ScenarioConfig constant_scenario(std::size_t n, double rho_db, double rate = 1.0, double loop_v = 0.0) {
    return make_scenario(constant_amplitudes(n), rho_db, rate, 1e-4, loop_v);
}

}  // namespace irsout::testing
