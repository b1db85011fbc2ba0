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

#include "irsout/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "irsout/errors.hpp"
#include "irsout/philox.hpp"

namespace irsout {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Phases are drawn from a stream id no simulation chunk uses.
constexpr std::uint64_t kPhaseStream = 0xFFFF'FFFF'FFFF'FFFFull;

std::string format_index(std::string_view base, std::size_t k) {
    return std::string(base) + "[" + std::to_string(k) + "]";
}

void validate_user(const UserParams& user, std::string_view path, std::vector<std::string>& out) {
    const std::string p(path);
    if (!(user.transmit_snr > 0.0) || !std::isfinite(user.transmit_snr))
        out.push_back(p + ".transmit_snr must be positive and finite");
    if (!(user.noise_var > 0.0) || !std::isfinite(user.noise_var))
        out.push_back(p + ".noise_var must be positive and finite");
    if (!(user.target_rate >= 0.0) || !std::isfinite(user.target_rate))
        out.push_back(p + ".target_rate must be nonnegative and finite");
    if (!(user.loop_q >= 0.0) || !std::isfinite(user.loop_q))
        out.push_back(p + ".loop_q must be nonnegative and finite");
    if (!(user.loop_v >= 0.0 && user.loop_v <= 1.0))
        out.push_back(p + ".loop_v out of [0,1]");
}

}  // namespace

double UserParams::loop_residual_var() const {
    return loop_q * std::pow(transmit_power(), loop_v);
}

std::string_view to_string(Direction direction) {
    return direction == Direction::u1_receives ? "u1" : "u2";
}

Direction direction_from_string(std::string_view text) {
    if (text == "u1" || text == "U1" || text == "u1_receives") return Direction::u1_receives;
    if (text == "u2" || text == "U2" || text == "u2_receives") return Direction::u2_receives;
    throw DomainError("unknown direction '" + std::string(text) + "' (expected u1 or u2)");
}

const UserParams& receiver(const ScenarioConfig& scenario, Direction direction) {
    return direction == Direction::u1_receives ? scenario.user1 : scenario.user2;
}

const UserParams& transmitter(const ScenarioConfig& scenario, Direction direction) {
    return direction == Direction::u1_receives ? scenario.user2 : scenario.user1;
}

double snr_threshold(double rate) {
    if (!(rate >= 0.0) || !std::isfinite(rate)) {
        throw DomainError("snr_threshold: rate must be nonnegative and finite");
    }
    return std::exp2(rate) - 1.0;
}

double equivalent_threshold(const UserParams& user) {
    const double rho = user.transmit_snr;
    const double residual = user.loop_q * std::pow(rho * user.noise_var, user.loop_v - 1.0);
    return (1.0 / rho + residual) * snr_threshold(user.target_rate);
}

double equivalent_threshold(const UserParams& receiving, const UserParams& transmitting) {
    const double interference = receiving.noise_var + receiving.loop_residual_var();
    return snr_threshold(receiving.target_rate) * interference / transmitting.transmit_power();
}

std::vector<double> pole_coefficients(const ChannelStats& channels, const IrsConfig& irs,
                                      Direction direction) {
    const double variance_product = direction == Direction::u1_receives
                                        ? channels.var_hr * channels.var_gt
                                        : channels.var_gr * channels.var_ht;
    std::vector<double> poles;
    poles.reserve(irs.size());
    for (double amplitude : irs.amplitudes) {
        if (amplitude == 0.0) continue;
        poles.push_back(0.25 * variance_product * amplitude * amplitude);
    }
    if (poles.empty()) {
        throw AllZeroAmplitudes(
            "every IRS amplitude is zero: the cascade channel vanishes and outage is 1");
    }
    return poles;
}

std::vector<std::string> validate(const ScenarioConfig& scenario) {
    std::vector<std::string> out;
    const auto& irs = scenario.irs;
    if (irs.amplitudes.empty()) out.emplace_back("irs.amplitudes must have at least one element");
    if (irs.amplitudes.size() != irs.phases.size()) {
        out.push_back("irs.phases length " + std::to_string(irs.phases.size()) +
                      " differs from irs.amplitudes length " + std::to_string(irs.amplitudes.size()));
    }
    for (std::size_t k = 0; k < irs.amplitudes.size(); ++k) {
        const double a = irs.amplitudes[k];
        if (!(a >= 0.0 && a <= 1.0)) out.push_back(format_index("irs.amplitudes", k) + " out of [0,1]");
    }
    for (std::size_t k = 0; k < irs.phases.size(); ++k) {
        const double phi = irs.phases[k];
        if (!(phi >= 0.0 && phi < kTwoPi)) out.push_back(format_index("irs.phases", k) + " out of [0,2pi)");
    }
    const auto& ch = scenario.channels;
    const std::pair<const char*, double> variances[] = {
        {"channels.var_ht", ch.var_ht}, {"channels.var_hr", ch.var_hr},
        {"channels.var_gt", ch.var_gt}, {"channels.var_gr", ch.var_gr}};
    for (const auto& [name, value] : variances) {
        if (!(value > 0.0) || !std::isfinite(value)) out.push_back(std::string(name) + " must be positive and finite");
    }
    validate_user(scenario.user1, "user1", out);
    validate_user(scenario.user2, "user2", out);
    return out;
}

void require_valid(const ScenarioConfig& scenario) {
    auto diagnostics = validate(scenario);
    if (!diagnostics.empty()) throw ValidationError(std::move(diagnostics));
}

std::vector<double> linear_amplitudes(std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<double>(i + 1) / static_cast<double>(n);
    return out;
}

std::vector<double> constant_amplitudes(std::size_t n) { return std::vector<double>(n, 1.0); }

std::vector<double> random_phases(std::size_t n, std::uint64_t seed) {
    NormalStream stream(seed, kPhaseStream);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double phase = kTwoPi * stream.uniform_pair()[0];
        if (phase >= kTwoPi) phase = 0.0;
        out[i] = phase;
    }
    return out;
}

}  // namespace irsout
