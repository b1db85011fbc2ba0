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

#include "irsout/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace irsout::specfun {
namespace {

void require_positive(double x, const char* function) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string(function) + ": argument must be positive and finite, got " +
                          std::to_string(x));
    }
}

void require_order(int n, const char* function) {
    if (n < 0) {
        throw DomainError(std::string(function) + ": order must be nonnegative");
    }
}

// exp(x) * Kn(x) == mantissa * exp(log_scale). The scale only moves when the
// recurrence would otherwise leave the double range.
struct ScaledKn {
    double mantissa;
    double log_scale;
};

constexpr double kRescaleThreshold = 1e150;

ScaledKn scaled_kn(int n, double x) {
    if (x < 1e-150 && n >= 1) {
        // Near zero K_1 ~ 1/x and the forward recurrence overflows, so carry
        // the ratio K_{m-1}/K_m and accumulate log K_m instead. The leading
        // terms of K_0 and K_1 are exact to double precision here.
        double ratio = x * (-std::log(x / 2.0) - std::numbers::egamma);
        double log_k = -std::log(x);
        for (int m = 1; m < n; ++m) {
            // K_{m+1}/K_m = ratio + 2m/x, written so that subnormal x stays finite.
            const double inverse = x / (2.0 * m);
            const double correction = ratio * inverse;
            log_k += std::log(2.0 * m) - std::log(x) + std::log1p(correction);
            ratio = inverse / (1.0 + correction);
        }
        // Scaled form: K_n(x) e^x with e^x == 1 at this size.
        return {1.0, log_k};
    }
    const auto k = detail::bessel_k01(x, true);
    if (n == 0) return {k.k0, 0.0};
    if (n == 1) return {k.k1, 0.0};
    double previous = k.k0;
    double current = k.k1;
    double log_scale = 0.0;
    for (int m = 1; m < n; ++m) {
        const double next = previous + (2.0 * m / x) * current;
        previous = current;
        current = next;
        if (current > kRescaleThreshold) {
            previous /= current;
            log_scale += std::log(current);
            current = 1.0;
        }
    }
    return {current, log_scale};
}

}  // namespace

double bessel_k0(double x) {
    require_positive(x, "bessel_k0");
    return detail::bessel_k01(x, false).k0;
}

double bessel_k1(double x) {
    require_positive(x, "bessel_k1");
    return detail::bessel_k01(x, false).k1;
}

double bessel_k0_scaled(double x) {
    require_positive(x, "bessel_k0_scaled");
    return detail::bessel_k01(x, true).k0;
}

double bessel_k1_scaled(double x) {
    require_positive(x, "bessel_k1_scaled");
    return detail::bessel_k01(x, true).k1;
}

double bessel_kn_scaled(int n, double x) {
    require_order(n, "bessel_kn_scaled");
    require_positive(x, "bessel_kn_scaled");
    const ScaledKn s = scaled_kn(n, x);
    if (s.log_scale == 0.0) return s.mantissa;
    const double value = s.mantissa * std::exp(s.log_scale);
    if (!std::isfinite(value)) {
        throw OverflowError("bessel_kn_scaled: result exceeds double range for n=" +
                            std::to_string(n) + ", x=" + std::to_string(x));
    }
    return value;
}

double bessel_kn(int n, double x) {
    require_order(n, "bessel_kn");
    require_positive(x, "bessel_kn");
    if (n == 0) return bessel_k0(x);
    if (n == 1) return bessel_k1(x);
    const ScaledKn s = scaled_kn(n, x);
    if (s.log_scale == 0.0) return s.mantissa * std::exp(-x);
    const double log_value = std::log(s.mantissa) + s.log_scale - x;
    if (log_value > std::log(std::numeric_limits<double>::max())) {
        throw OverflowError("bessel_kn: result exceeds double range for n=" + std::to_string(n) +
                            ", x=" + std::to_string(x) + "; use log_bessel_kn");
    }
    return std::exp(log_value);
}

double log_bessel_kn(int n, double x) {
    require_order(n, "log_bessel_kn");
    require_positive(x, "log_bessel_kn");
    const ScaledKn s = scaled_kn(n, x);
    return std::log(s.mantissa) + s.log_scale - x;
}

double bessel_j0(double x) {
    if (!std::isfinite(x)) throw DomainError("bessel_j0: argument must be finite");
    const double ax = std::abs(x);

    if (ax <= 17.0) {
        // The power series loses about log10(I0(x)) digits to cancellation,
        // so it runs in long double.
        const long double t = -static_cast<long double>(ax) * ax / 4.0L;
        long double term = 1.0L;
        long double sum = 1.0L;
        for (int k = 1; k < 200; ++k) {
            term *= t / (static_cast<long double>(k) * k);
            sum += term;
            if (std::abs(term) < 1e-22L) break;
        }
        return static_cast<double>(sum);
    }

    // Hankel asymptotic expansion, truncated at its smallest term.
    double p = 1.0;
    double q = 0.0;
    double term = 1.0;
    double last_magnitude = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double next = term * (-(odd * odd)) / (8.0 * k * ax);
        if (std::abs(next) >= last_magnitude) break;
        term = next;
        last_magnitude = std::abs(term);
        // a_k/x^k enters P with sign (-1)^(k/2) for even k, Q with (-1)^((k-1)/2) for odd k.
        switch (k % 4) {
            case 0: p += term; break;
            case 1: q += term; break;
            case 2: p -= term; break;
            case 3: q -= term; break;
        }
        if (last_magnitude < 1e-17) break;
    }
    const double c = std::cos(ax);
    const double s = std::sin(ax);
    const double cos_chi = (c + s) * std::numbers::sqrt2 / 2.0;
    const double sin_chi = (s - c) * std::numbers::sqrt2 / 2.0;
    return std::sqrt(2.0 / (std::numbers::pi * ax)) * (p * cos_chi - q * sin_chi);
}

double ln_gamma(double x) {
    require_positive(x, "ln_gamma");
#if defined(__GLIBC__)
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

}  // namespace irsout::specfun
