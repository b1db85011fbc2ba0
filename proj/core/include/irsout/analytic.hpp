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

// Closed-form distribution of the cascade channel z = sum_i h_i theta_i g_i
// and the outage probabilities built on it.
//
// With a_i = sigma_h^2 sigma_g^2 |theta_i|^2 / 4 and distinct a_i:
//
//   p_|z|(r)     = r sum_i C_i K0(r / sqrt(a_i))
//   P(|z|^2<=xi) = sum_i C_i [a_i - sqrt(a_i xi) K1(sqrt(xi / a_i))]
//
// When every a_i equals a (constant amplitude), with b = 2 sqrt(a):
//
//   p_|z|(r)     = 4 r^N / (Gamma(N) b^(N+1)) K_{N-1}(2r/b)
//   P(|z|^2<=xi) = 1 - 2 (U/2)^N K_N(U) / Gamma(N),  U = 2 sqrt(xi) / b
//
// None of these depend on the IRS phases.

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "irsout/model.hpp"

namespace irsout {

enum class Regime { general, constant_amplitude };

std::string_view to_string(Regime regime);

namespace detail {

/// Precision-specific evaluation of the general-regime sums.
class PartialFractionEvaluator {
public:
    virtual ~PartialFractionEvaluator() = default;
    virtual double pdf(double r) const = 0;
    virtual double power_cdf(double xi) const = 0;
    /// sum_i C_i a_i evaluated at working precision; 1 in exact arithmetic.
    virtual double total_probability() const = 0;
    virtual std::vector<double> coefficients() const = 0;
    virtual unsigned digits() const = 0;
};

}  // namespace detail

/// Precomputed cascade-channel distribution for one direction.
struct CascadeDistribution {
    std::vector<double> poles;      ///< a_i, zero-amplitude elements dropped
    std::vector<double> pf_coeffs;  ///< C_i; empty in the constant regime
    double sigma_product = 1.0;     ///< sigma_h * sigma_g for this direction
    Regime regime = Regime::general;
    std::size_t n_elements = 0;     ///< effective N
    double condition = 1.0;         ///< max |C_i a_i|; 1 in the constant regime
    unsigned working_digits = 0;    ///< decimal digits used for the sums

    std::shared_ptr<const detail::PartialFractionEvaluator> evaluator;
};

struct OutageReport {
    double p_user1 = 0.0;
    double p_user2 = 0.0;
    double p_system = 0.0;
    double gamma_prime_1 = 0.0;
    double gamma_prime_2 = 0.0;
    Regime regime = Regime::general;
    std::optional<double> approx_system;
};

namespace analytic {

/// Distribution from raw poles. Selects the constant regime when all poles
/// agree within 1e-12 relative; otherwise throws DegeneratePoles if any pair
/// is closer than kPoleSeparationTolerance.
CascadeDistribution build_distribution(std::span<const double> poles, double sigma_product = 1.0);

/// Partial-fraction form without the constant-amplitude dispatch; a single
/// pole gives C_1 = 1/a_1. Throws DegeneratePoles for coincident poles.
CascadeDistribution build_general_distribution(std::span<const double> poles, double sigma_product = 1.0);

/// Distribution of the cascade channel seen by the receiving user.
CascadeDistribution build_distribution(const ScenarioConfig& scenario, Direction direction);

/// Density of |z| at r >= 0.
double cascade_pdf(const CascadeDistribution& dist, double r);

/// P(|z|^2 <= xi) for xi >= 0.
double cascade_power_cdf(const CascadeDistribution& dist, double xi);

/// Outage of the user receiving in `direction`: the cascade-power CDF at the
/// equivalent threshold gamma_t (sigma_r^2 + q_r P_r^v_r) / P_t.
double outage_user(const ScenarioConfig& scenario, Direction direction);

/// Both per-user outages and their union 1 - (1 - p1)(1 - p2). The two
/// cascade channels use disjoint channel vectors, so they are independent.
OutageReport outage_system(const ScenarioConfig& scenario);

/// Large-N constant-amplitude approximation
///   (g1 + g2 - g1 g2) / (N - 1)
/// kept in its original closed form. Note that expanding the
/// union of two per-user approximations g/(N-1) gives a cross term over
/// (N-1)^2 instead; see outage_approx_union.
double outage_approx(double gamma_prime_1, double gamma_prime_2, std::size_t n);

/// Per-user large-N approximation g / (N - 1).
double outage_approx_user(double gamma_prime, std::size_t n);

/// 1 - (1 - g1/(N-1)) (1 - g2/(N-1)).
double outage_approx_union(double gamma_prime_1, double gamma_prime_2, std::size_t n);

/// outage_approx for a constant-amplitude scenario. Thresholds are taken
/// relative to the per-element mean cascade power 4a, which is 1 for unit
/// variances and |theta| = 1. Throws DomainError for N < 2 or unequal amplitudes.
double outage_approx(const ScenarioConfig& scenario);

/// Half-duplex baseline: each direction gets its own slot at twice the target
/// rate and no loop residual; combined as for the two-way system.
double one_way_outage(const ScenarioConfig& scenario);

}  // namespace analytic

}  // namespace irsout
