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
#include <string>
#include <string_view>
#include <vector>

namespace irsout {

/// Per-element reflection coefficients theta_i = amplitude_i * exp(j phase_i).
struct IrsConfig {
    std::vector<double> amplitudes;  ///< |theta_i| in [0, 1]
    std::vector<double> phases;      ///< radians in [0, 2 pi)

    std::size_t size() const noexcept { return amplitudes.size(); }
    bool operator==(const IrsConfig&) const = default;
};

/// Per-element variances of the four i.i.d. complex Gaussian channel vectors:
/// h_t (U1 -> IRS), g_t (U2 -> IRS), h_r (IRS -> U1), g_r (IRS -> U2).
struct ChannelStats {
    double var_ht = 1.0;
    double var_hr = 1.0;
    double var_gt = 1.0;
    double var_gr = 1.0;

    bool operator==(const ChannelStats&) const = default;
};

struct UserParams {
    double transmit_snr = 1.0;  ///< rho = P / noise_var, linear
    double noise_var = 1.0;
    double target_rate = 1.0;   ///< bits per channel use
    double loop_q = 0.0;        ///< residual loop interference variance q * P^v
    double loop_v = 0.0;

    double transmit_power() const noexcept { return transmit_snr * noise_var; }
    double loop_residual_var() const;

    bool operator==(const UserParams&) const = default;
};

struct ScenarioConfig {
    IrsConfig irs;
    ChannelStats channels;
    UserParams user1;
    UserParams user2;

    bool operator==(const ScenarioConfig&) const = default;
};

/// Which user decodes. U1 sees h_r^T Theta g_t; U2 sees g_r^T Theta h_t.
enum class Direction { u1_receives, u2_receives };

std::string_view to_string(Direction direction);
Direction direction_from_string(std::string_view text);

const UserParams& receiver(const ScenarioConfig& scenario, Direction direction);
const UserParams& transmitter(const ScenarioConfig& scenario, Direction direction);

/// gamma_t = 2^rate - 1.
double snr_threshold(double rate);

/// Single-user equivalent threshold (1/rho + q (rho sigma^2)^(v-1)) * gamma_t:
/// the outage of this user is the cascade-power CDF at this value when both
/// users transmit with the same power.
double equivalent_threshold(const UserParams& user);

/// Equivalent threshold from the per-direction SNR definition,
/// gamma_t * (sigma_r^2 + q_r P_r^v_r) / P_t. Equals the single-user form
/// whenever both users transmit with the same power.
double equivalent_threshold(const UserParams& receiving, const UserParams& transmitting);

/// a_i = 1/4 * var_receive * var_transmit * |theta_i|^2 for each element with
/// nonzero amplitude, in element order. Throws AllZeroAmplitudes if none remain.
std::vector<double> pole_coefficients(const ChannelStats& channels, const IrsConfig& irs,
                                      Direction direction);

/// Every violated invariant, as "field.path message"; empty means valid.
std::vector<std::string> validate(const ScenarioConfig& scenario);

/// Throws ValidationError carrying validate()'s diagnostics.
void require_valid(const ScenarioConfig& scenario);

/// |theta_i| = i/N, i = 1..N.
std::vector<double> linear_amplitudes(std::size_t n);
std::vector<double> constant_amplitudes(std::size_t n);
/// Uniform phases on [0, 2 pi) drawn from a Philox stream keyed by seed.
std::vector<double> random_phases(std::size_t n, std::uint64_t seed);

}  // namespace irsout
