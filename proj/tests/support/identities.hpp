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

// Checks of the partial-fraction expansion
//   prod_i 1/(1 + z^2 a_i) = sum_i C_i / (z^2 + 1/a_i)
// carried out at a precision that covers the cancellation in the sum.

#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "irsout/partial_fractions.hpp"

namespace irsout::testing {

template <class Real>
double product_sum_error_as(std::span<const double> poles, std::span<const double> zs) {
    const auto c = partial_fraction_coeffs_as<Real>(poles);
    double worst = 0.0;
    for (double zd : zs) {
        const Real z2 = Real(zd) * Real(zd);
        Real product = 1;
        Real sum = 0;
        for (std::size_t i = 0; i < poles.size(); ++i) {
            const Real a = poles[i];
            product /= 1 + z2 * a;
            sum += c[i] / (z2 + 1 / a);
        }
        worst = std::max(worst, static_cast<double>(abs((sum - product) / product)));
    }
    return worst;
}

/// Largest relative mismatch between product and sum over `zs`.
inline double product_sum_error(std::span<const double> poles, std::span<const double> zs) {
    using namespace precision;
    const double digits = log10_condition(poles) + 20.0;
    if (digits <= 50) return product_sum_error_as<Float50>(poles, zs);
    if (digits <= 100) return product_sum_error_as<Float100>(poles, zs);
    if (digits <= 200) return product_sum_error_as<Float200>(poles, zs);
    return product_sum_error_as<Float400>(poles, zs);
}

}  // namespace irsout::testing
