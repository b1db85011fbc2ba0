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

// Partial fractions of prod_i 1/(1 + z^2 a_i) = sum_i C_i / (z^2 + 1/a_i),
// C_i = a_i^(N-2) / prod_{j != i} (a_i - a_j).
//
// The C_i alternate in sign and grow quickly when poles cluster: for the
// linear profile |theta_i| = i/N, max |C_i a_i| is ~3 at N = 4, ~1.8e4 at
// N = 16 and ~6.6e20 at N = 64. Any sum over them loses log10 of that many
// digits, so closed forms built on the C_i are evaluated in the precision
// picked by required_digits().

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace irsout {

namespace precision {

template <unsigned Digits>
using Float = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>,
                                            boost::multiprecision::et_off>;
using Float50 = Float<50>;
using Float100 = Float<100>;
using Float200 = Float<200>;
using Float400 = Float<400>;

}  // namespace precision

/// Relative separation below which two poles are treated as coincident.
inline constexpr double kPoleSeparationTolerance = 1e-9;

/// Throws DegeneratePoles naming the first offending pair (original indices).
void check_pole_separation(std::span<const double> poles);

/// C_i in double, accumulated as log-magnitude and sign so that no
/// intermediate overflows. Requires positive, separated poles.
std::vector<double> partial_fraction_coeffs(std::span<const double> poles);

/// log10 max_i |C_i a_i|, computed in log space; the number of decimal digits
/// a sum over the partial fractions cancels away.
double log10_condition(std::span<const double> poles);

/// C_i at the precision of Real, as (1/a_i) prod_{j != i} a_i / (a_i - a_j).
/// The poles are taken as exact.
template <class Real>
std::vector<Real> partial_fraction_coeffs_as(std::span<const double> poles) {
    check_pole_separation(poles);
    const std::size_t n = poles.size();
    std::vector<Real> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Real ai = poles[i];
        Real c = Real(1) / ai;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) c *= ai / (ai - Real(poles[j]));
        }
        out[i] = c;
    }
    return out;
}

}  // namespace irsout
