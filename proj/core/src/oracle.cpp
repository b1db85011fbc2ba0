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

#include "irsout/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "irsout/errors.hpp"
#include "irsout/specfun.hpp"

namespace irsout::oracle {
namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;

// Consecutive partial sums folded by repeated averaging.
constexpr std::size_t kAveragingDepth = 10;

void check_inputs(std::span<const double> poles, const QuadratureSpec& spec) {
    if (poles.empty()) throw DomainError("oracle: need at least one pole");
    for (double a : poles) {
        if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("oracle: poles must be positive and finite");
    }
    if (!(spec.abs_tol > 0.0)) throw DomainError("oracle: abs_tol must be positive");
    if (spec.max_oscillation_intervals < 1) throw DomainError("oracle: max_oscillation_intervals must be >= 1");
}

// McMahon's expansion, then bisection on the sign change of J0.
double compute_j0_zero(std::size_t k) {
    const double beta = (static_cast<double>(k) - 0.25) * std::numbers::pi;
    const double w = 1.0 / (8.0 * beta);
    const double guess = beta + w - (124.0 / 3.0) * w * w * w + (120928.0 / 15.0) * std::pow(w, 5);
    double lo = guess - 0.05;
    double hi = guess + 0.05;
    double f_lo = specfun::bessel_j0(lo);
    for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = specfun::bessel_j0(mid);
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

class ZeroCache {
public:
    double get(std::size_t k) {
        {
            std::shared_lock lock(mutex_);
            if (k <= zeros_.size()) return zeros_[k - 1];
        }
        std::unique_lock lock(mutex_);
        while (zeros_.size() < k) zeros_.push_back(compute_j0_zero(zeros_.size() + 1));
        return zeros_[k - 1];
    }

private:
    std::shared_mutex mutex_;
    std::vector<double> zeros_;
};

ZeroCache& zero_cache() {
    static ZeroCache cache;
    return cache;
}

double fold_by_averaging(std::span<const double> sums) {
    std::vector<double> v(sums.begin(), sums.end());
    for (std::size_t level = v.size(); level > 1; --level) {
        for (std::size_t i = 0; i + 1 < level; ++i) v[i] = 0.5 * (v[i] + v[i + 1]);
    }
    return v.front();
}

}  // namespace

double characteristic_function(std::span<const double> poles, double z) {
    double product = 1.0;
    const double z2 = z * z;
    for (double a : poles) product /= 1.0 + z2 * a;
    return product;
}

double bessel_j0_zero(std::size_t k) {
    if (k == 0) throw DomainError("bessel_j0_zero: zeros are numbered from 1");
    return zero_cache().get(k);
}

double pdf_via_quadrature(std::span<const double> poles, double r, const QuadratureSpec& spec) {
    check_inputs(poles, spec);
    if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("pdf_via_quadrature: r must be nonnegative and finite");
    if (r == 0.0) return 0.0;

    auto integrand = [&](double z) { return z * characteristic_function(poles, z) * specfun::bessel_j0(r * z); };

    // Tolerance on the integral itself; the density is r times it.
    const double tol = spec.abs_tol / r;
    // Beyond this z the characteristic function is in its power-law tail.
    const double bulk_end = 3.0 / std::sqrt(*std::min_element(poles.begin(), poles.end()));

    std::vector<double> partial;
    double total = 0.0;
    double lower = 0.0;
    double previous_estimate = std::numeric_limits<double>::quiet_NaN();
    int stable = 0;
    for (std::size_t k = 1; k <= spec.max_oscillation_intervals; ++k) {
        const double upper = bessel_j0_zero(k) / r;
        double error = 0.0;
        const double piece = Kronrod::integrate(integrand, lower, upper, 20, 1e-12, &error);
        total += piece;
        partial.push_back(total);
        lower = upper;
        if (upper < bulk_end) continue;

        // Alternating tail: the remainder is bounded by the next piece.
        if (std::abs(piece) < 0.01 * tol) return std::max(0.0, r * total);

        if (spec.acceleration == Acceleration::alternating_series && partial.size() > kAveragingDepth) {
            const double estimate =
                fold_by_averaging(std::span(partial).last(kAveragingDepth + 1));
            if (std::abs(estimate - previous_estimate) < 0.1 * tol) {
                if (++stable >= 2) return std::max(0.0, r * estimate);
            } else {
                stable = 0;
            }
            previous_estimate = estimate;
        }
    }
    throw ConvergenceFailure("pdf_via_quadrature: no convergence within " +
                             std::to_string(spec.max_oscillation_intervals) +
                             " oscillation intervals at r = " + std::to_string(r));
}

double cdf_via_quadrature(std::span<const double> poles, double xi, const QuadratureSpec& spec) {
    check_inputs(poles, spec);
    if (!(xi >= 0.0) || !std::isfinite(xi)) throw DomainError("cdf_via_quadrature: xi must be nonnegative and finite");
    if (xi == 0.0) return 0.0;

    auto density = [&](double r) { return pdf_via_quadrature(poles, r, spec); };
    const double upper = std::sqrt(xi);
    // Nearly all of the mass sits below a few multiples of the largest scale
    // sqrt(a); split there so the adaptive rule does not skip over it. Past
    // 8 scales the segments have fixed width and the loop stops once one of
    // them is negligible: the density decays at least like exp(-r / sqrt(a_max))
    // there, and far-tail evaluations are the expensive ones.
    const double scale = std::sqrt(*std::max_element(poles.begin(), poles.end())) *
                         std::sqrt(static_cast<double>(poles.size()));
    std::vector<double> breaks{0.0};
    for (double b = scale; b < std::min(upper, 8.0 * scale); b *= 2.0) breaks.push_back(b);
    const double bulk_end = breaks.back();
    for (double b = std::max(bulk_end, 8.0 * scale) + scale; b < upper && breaks.size() < 4096; b += scale) {
        breaks.push_back(b);
    }
    breaks.push_back(upper);

    double total = 0.0;
    for (std::size_t k = 1; k < breaks.size(); ++k) {
        // The density carries absolute noise near abs_tol, so ask each segment
        // for relative accuracy only down to that floor.
        double error = 0.0;
        double l1 = 0.0;
        Kronrod::integrate(density, breaks[k - 1], breaks[k], 0, 0.0, &error, &l1);
        const double tolerance = std::max(1e-9, 1e-2 * spec.abs_tol / std::max(l1, 1e-300));
        const double piece = Kronrod::integrate(density, breaks[k - 1], breaks[k], 12, tolerance, &error);
        total += piece;
        if (breaks[k - 1] >= 8.0 * scale && std::abs(piece) < 1e-2 * spec.abs_tol) break;
    }
    return std::clamp(total, 0.0, 1.0);
}

}  // namespace irsout::oracle
