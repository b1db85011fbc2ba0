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

// Philox4x32-10 counter-based generator (Salmon et al., SC'11) and the
// Gaussian stream built on it. A stream is fully determined by
// (seed, stream id), so any chunk of a simulation can be regenerated
// independently of how work was scheduled.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace irsout {

struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr std::uint32_t kMultiplier0 = 0xD2511F53u;
    static constexpr std::uint32_t kMultiplier1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    static constexpr Counter generate(Counter ctr, Key key) {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            const std::uint64_t p0 = std::uint64_t{kMultiplier0} * ctr[0];
            const std::uint64_t p1 = std::uint64_t{kMultiplier1} * ctr[2];
            const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const auto lo0 = static_cast<std::uint32_t>(p0);
            const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const auto lo1 = static_cast<std::uint32_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        }
        return ctr;
    }
};

/// Sequential view of one Philox substream keyed by (seed, stream).
/// Each block yields two 53-bit uniforms; one block makes one complex Gaussian.
class NormalStream {
public:
    NormalStream(std::uint64_t seed, std::uint64_t stream)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_(stream) {}

    /// Two independent uniforms on [0, 1).
    std::array<double, 2> uniform_pair() {
        const Philox4x32::Counter ctr{static_cast<std::uint32_t>(block_),
                                      static_cast<std::uint32_t>(block_ >> 32),
                                      static_cast<std::uint32_t>(stream_),
                                      static_cast<std::uint32_t>(stream_ >> 32)};
        ++block_;
        const auto out = Philox4x32::generate(ctr, key_);
        const std::uint64_t w0 = (std::uint64_t{out[0]} << 32) | out[1];
        const std::uint64_t w1 = (std::uint64_t{out[2]} << 32) | out[3];
        return {to_unit(w0), to_unit(w1)};
    }

    /// Circularly symmetric complex Gaussian with E|h|^2 = variance
    /// (each component has variance/2).
    std::complex<double> complex_normal(double variance) {
        const auto u = uniform_pair();
        const double radius = std::sqrt(-variance * std::log1p(-u[0]));
        const double angle = 2.0 * std::numbers::pi * u[1];
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

    std::uint64_t blocks_consumed() const noexcept { return block_; }

private:
    static double to_unit(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

    Philox4x32::Key key_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
};

}  // namespace irsout
