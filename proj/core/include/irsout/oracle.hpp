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

// Brute-force reference for the cascade distribution, straight from the
// characteristic function of z:
//
//   Psi(z)  = prod_i 1 / (1 + z^2 a_i)
//   p(r)    = r * int_0^inf z Psi(z) J0(r z) dz
//
// No partial fractions are involved, so coincident poles are fine.

#pragma once

#include <cstddef>
#include <span>

namespace irsout::oracle {

enum class Acceleration { none, alternating_series };

struct QuadratureSpec {
    double abs_tol = 1e-9;
    std::size_t max_oscillation_intervals = 10000;
    Acceleration acceleration = Acceleration::alternating_series;
};

/// Joint characteristic function of (Re z, Im z) at radius z = |omega|.
double characteristic_function(std::span<const double> poles, double z);

/// k-th positive zero of J0 (k >= 1). Cached; safe for concurrent callers.
double bessel_j0_zero(std::size_t k);

/// Density of |z| at r by oscillatory quadrature, split at the zeros of
/// J0(r z) and accelerated over the alternating tail.
/// Throws ConvergenceFailure past max_oscillation_intervals.
double pdf_via_quadrature(std::span<const double> poles, double r, const QuadratureSpec& spec = {});

/// P(|z|^2 <= xi) = int_0^sqrt(xi) pdf_via_quadrature(r) dr, clamped to [0, 1].
double cdf_via_quadrature(std::span<const double> poles, double xi, const QuadratureSpec& spec = {});

}  // namespace irsout::oracle
