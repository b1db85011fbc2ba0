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

#include <cmath>

#include "irsout/philox.hpp"

using irsout::NormalStream;
using irsout::Philox4x32;

// Known-answer vectors from the Random123 distribution.
TEST_CASE("Philox4x32-10 known answers") {
    using C = Philox4x32::Counter;
    using K = Philox4x32::Key;
    CHECK(Philox4x32::generate(C{0, 0, 0, 0}, K{0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::generate(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, K{0xffffffff, 0xffffffff}) ==
          C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::generate(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, K{0xa4093822, 0x299f31d0}) ==
          C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
    static_assert(Philox4x32::generate(C{0, 0, 0, 0}, K{0, 0})[0] == 0x6627e8d5);
}

TEST_CASE("streams are reproducible and distinct") {
    NormalStream a(42, 7);
    NormalStream b(42, 7);
    NormalStream other_stream(42, 8);
    NormalStream other_seed(43, 7);
    for (int i = 0; i < 100; ++i) {
        const auto u = a.uniform_pair();
        CHECK(u == b.uniform_pair());
        CHECK(u != other_stream.uniform_pair());
        CHECK(u != other_seed.uniform_pair());
        CHECK(u[0] >= 0.0);
        CHECK(u[0] < 1.0);
        CHECK(u[1] >= 0.0);
        CHECK(u[1] < 1.0);
    }
    CHECK(a.blocks_consumed() == 100);
}

TEST_CASE("complex normal moments") {
    NormalStream s(2026, 0);
    const int n = 200000;
    const double variance = 2.5;
    double sum_re = 0.0, sum_im = 0.0, sum_re2 = 0.0, sum_abs2 = 0.0, sum_abs4 = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto h = s.complex_normal(variance);
        const double p = std::norm(h);
        sum_re += h.real();
        sum_im += h.imag();
        sum_re2 += h.real() * h.real();
        sum_abs2 += p;
        sum_abs4 += p * p;
    }
    // |h|^2 is exponential with mean `variance`: its sd is also `variance`.
    const double se = variance / std::sqrt(n);
    CHECK(std::abs(sum_abs2 / n - variance) < 5 * se);
    CHECK(std::abs(sum_re2 / n - variance / 2) < 5 * se);
    CHECK(std::abs(sum_re / n) < 5 * std::sqrt(variance / 2 / n));
    CHECK(std::abs(sum_im / n) < 5 * std::sqrt(variance / 2 / n));
    // E|h|^4 = 2 variance^2 for an exponential power.
    CHECK(sum_abs4 / n == doctest::Approx(2 * variance * variance).epsilon(0.05));
}
