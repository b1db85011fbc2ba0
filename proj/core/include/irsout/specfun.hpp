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

// Special functions behind the cascade-channel closed forms.
//
// K0 and K1 use the ascending series for x <= 2 and Steed's continued
// fraction (CF2) above it; Kn is built from them by upward recurrence, which
// is stable for the K family. The K0/K1 kernel is a template so the same
// algorithm can run in extended precision where the partial-fraction sums
// need more digits than a double carries.
//
// I0 is intentionally absent: the inversion integral only needs J0.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include <boost/math/constants/constants.hpp>

#include "irsout/errors.hpp"

namespace irsout::specfun {

/// Documented accuracy contract of a kernel.
struct AccuracySpec {
    double max_relative_error;
};

/// K0, K1, Kn (n <= 512) on x in [1e-8, 700].
inline constexpr AccuracySpec kBesselKAccuracy{1e-12};
/// Near the domain edges (x < 1e-8 or x > 700) the contract degrades to this.
inline constexpr AccuracySpec kBesselKEdgeAccuracy{1e-10};
/// J0 is specified in absolute terms on |x| <= 1e4.
inline constexpr double kBesselJ0AbsoluteError = 1e-12;
inline constexpr AccuracySpec kLnGammaAccuracy{1e-13};

double bessel_k0(double x);
double bessel_k1(double x);
/// exp(x) * K0(x)
double bessel_k0_scaled(double x);
/// exp(x) * K1(x)
double bessel_k1_scaled(double x);

/// Kn(x). Throws OverflowError when the value exceeds the double range;
/// use log_bessel_kn or bessel_kn_scaled there.
double bessel_kn(int n, double x);
/// exp(x) * Kn(x). Throws OverflowError if even the scaled value overflows.
double bessel_kn_scaled(int n, double x);
/// ln Kn(x), finite for every n >= 0 and x > 0 in the recurrence's range.
double log_bessel_kn(int n, double x);

double bessel_j0(double x);

/// ln Gamma(x) for x > 0.
double ln_gamma(double x);

namespace detail {

template <class Real>
struct BesselK01 {
    Real k0;
    Real k1;
};

/// K0(x) and K1(x) at the precision of Real, multiplied by exp(x) when
/// `scaled` is set. Requires x > 0.
template <class Real>
BesselK01<Real> bessel_k01(const Real& x, bool scaled) {
    using std::abs;
    using std::exp;
    using std::log;
    using std::sqrt;
    const Real eps = std::numeric_limits<Real>::epsilon();
    const Real euler = boost::math::constants::euler<Real>();
    constexpr int kMaxIterations = 100000;

    if (x <= Real(2)) {
        // Ascending series, t = x^2/4:
        //   K0 = -(ln(x/2) + gamma) I0 + sum H_k t^k/(k!)^2
        //   K1 = 1/x + ln(x/2) I1 - (x/4) sum (H_k + H_{k+1} - 2 gamma) t^k/(k!(k+1)!)
        const Real t = x * x / 4;
        Real term0 = 1;  // t^k / (k!)^2
        Real term1 = 1;  // t^k / (k! (k+1)!)
        Real harmonic = 0;
        Real i0 = 0, harmonic_sum0 = 0;
        Real i1_sum = 0, psi_sum1 = 0;
        for (int k = 0; k < kMaxIterations; ++k) {
            const Real next_harmonic = harmonic + Real(1) / (k + 1);
            i0 += term0;
            harmonic_sum0 += harmonic * term0;
            i1_sum += term1;
            psi_sum1 += (harmonic + next_harmonic - 2 * euler) * term1;
            if (term0 <= eps * i0 && term1 <= eps * i1_sum) break;
            term0 *= t / Real((k + 1) * (k + 1));
            term1 *= t / Real((k + 1) * (k + 2));
            harmonic = next_harmonic;
        }
        const Real log_half_x = log(x / 2);
        const Real k0 = -(log_half_x + euler) * i0 + harmonic_sum0;
        const Real k1 = Real(1) / x + log_half_x * (x / 2) * i1_sum - (x / 4) * psi_sum1;
        if (!scaled) return {k0, k1};
        const Real scale = exp(x);
        return {k0 * scale, k1 * scale};
    }

    // Steed's method for K_mu, K_{mu+1} at mu = 0.
    Real b = 2 * (1 + x);
    Real d = Real(1) / b;
    Real h = d;
    Real delh = d;
    Real q1 = 0;
    Real q2 = 1;
    const Real a1 = Real(1) / 4;
    Real q = a1;
    Real c = a1;
    Real a = -a1;
    Real s = 1 + q * delh;
    int i = 2;
    for (; i < kMaxIterations; ++i) {
        a -= 2 * (i - 1);
        c = -a * c / i;
        const Real qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2;
        d = Real(1) / (b + a * d);
        delh = (b * d - 1) * delh;
        h += delh;
        const Real dels = q * delh;
        s += dels;
        if (abs(dels / s) < eps) break;
    }
    if (i == kMaxIterations) {
        throw ConvergenceFailure("bessel_k01: continued fraction did not converge");
    }
    h = a1 * h;
    Real k0 = sqrt(boost::math::constants::pi<Real>() / (2 * x)) / s;
    if (!scaled) k0 *= exp(-x);
    const Real k1 = k0 * (x + Real(1) / 2 - h) / x;
    return {k0, k1};
}

}  // namespace detail

}  // namespace irsout::specfun
