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

#include "irsout/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "irsout/errors.hpp"
#include "irsout/partial_fractions.hpp"
#include "irsout/specfun.hpp"

namespace irsout {

// ---------------------------------------------------------------------------
// Partial fractions

void check_pole_separation(std::span<const double> poles) {
    if (poles.empty()) throw DomainError("partial fractions need at least one pole");
    for (double a : poles) {
        if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("poles must be positive and finite");
    }
    std::vector<std::size_t> order(poles.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return poles[l] < poles[r]; });
    for (std::size_t k = 1; k < order.size(); ++k) {
        const double lo = poles[order[k - 1]];
        const double hi = poles[order[k]];
        if (hi - lo < kPoleSeparationTolerance * hi) {
            const std::size_t i = std::min(order[k - 1], order[k]);
            const std::size_t j = std::max(order[k - 1], order[k]);
            throw DegeneratePoles(i, j,
                                  "poles " + std::to_string(i) + " and " + std::to_string(j) +
                                      " coincide within relative tolerance 1e-9 (a = " +
                                      std::to_string(hi) +
                                      "); use the constant-amplitude form or the quadrature oracle");
        }
    }
}

std::vector<double> partial_fraction_coeffs(std::span<const double> poles) {
    check_pole_separation(poles);
    const std::size_t n = poles.size();
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double log_magnitude = (static_cast<double>(n) - 2.0) * std::log(poles[i]);
        bool negative = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const double diff = poles[i] - poles[j];
            log_magnitude -= std::log(std::abs(diff));
            negative ^= diff < 0.0;
        }
        const double magnitude = std::exp(log_magnitude);
        out[i] = negative ? -magnitude : magnitude;
    }
    return out;
}

double log10_condition(std::span<const double> poles) {
    const std::size_t n = poles.size();
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        double log_magnitude = (static_cast<double>(n) - 1.0) * std::log(poles[i]);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) log_magnitude -= std::log(std::abs(poles[i] - poles[j]));
        }
        worst = std::max(worst, log_magnitude);
    }
    return worst / std::numbers::ln10;
}

std::string_view to_string(Regime regime) {
    return regime == Regime::general ? "general" : "constant_amplitude";
}

namespace {

// 1 - y K_1(y) without the cancellation of the direct form at small y:
//   -2t ln(y/2) sum t^k/(k!(k+1)!) + t sum (psi(k+1) + psi(k+2)) t^k/(k!(k+1)!),  t = y^2/4.
template <class Real>
Real one_minus_y_k1(const Real& y) {
    using std::abs;
    using std::log;
    const Real t = y * y / 4;
    const Real log_half = log(y / 2);
    const Real gamma = boost::math::constants::euler<Real>();
    const Real eps = std::numeric_limits<Real>::epsilon();
    Real weight = 1;  // t^k/(k!(k+1)!)
    Real harmonic = 0;  // H_k
    Real series_log = 0;
    Real series_psi = 0;
    for (int k = 0; k < 1000; ++k) {
        if (k > 0) {
            weight *= t / (Real(k) * Real(k + 1));
            harmonic += Real(1) / k;
        }
        const Real psi_sum = -2 * gamma + 2 * harmonic + Real(1) / (k + 1);
        series_log += weight;
        series_psi += psi_sum * weight;
        if (weight < eps * series_log) break;
    }
    return -2 * t * log_half * series_log + t * series_psi;
}

template <class Real>
class Evaluator final : public detail::PartialFractionEvaluator {
public:
    Evaluator(std::span<const double> poles, unsigned digits)
        : coeffs_(partial_fraction_coeffs_as<Real>(poles)), digits_(digits) {
        using std::sqrt;
        for (double a : poles) {
            poles_.emplace_back(a);
            sqrt_poles_.push_back(sqrt(Real(a)));
        }
    }

    double pdf(double r) const override {
        if (r == 0.0) return 0.0;
        const Real radius = r;
        Real sum = 0;
        for (std::size_t i = 0; i < poles_.size(); ++i) {
            sum += coeffs_[i] * specfun::detail::bessel_k01<Real>(radius / sqrt_poles_[i], false).k0;
        }
        return static_cast<double>(radius * sum);
    }

    double power_cdf(double xi) const override {
        using std::sqrt;
        if (xi == 0.0) return 0.0;
        const Real root = sqrt(Real(xi));
        Real sum = 0;
        for (std::size_t i = 0; i < poles_.size(); ++i) {
            const Real y = root / sqrt_poles_[i];
            const Real tail = y < 1 ? one_minus_y_k1(y) : 1 - y * specfun::detail::bessel_k01<Real>(y, false).k1;
            sum += coeffs_[i] * poles_[i] * tail;
        }
        return static_cast<double>(sum);
    }

    double total_probability() const override {
        Real sum = 0;
        for (std::size_t i = 0; i < poles_.size(); ++i) sum += coeffs_[i] * poles_[i];
        return static_cast<double>(sum);
    }

    std::vector<double> coefficients() const override {
        std::vector<double> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(static_cast<double>(c));
        return out;
    }

    unsigned digits() const override { return digits_; }

private:
    std::vector<Real> coeffs_;
    std::vector<Real> poles_;
    std::vector<Real> sqrt_poles_;
    unsigned digits_;
};

// Guard digits kept beyond the cancellation estimate.
constexpr double kGuardDigits = 20.0;

std::shared_ptr<const detail::PartialFractionEvaluator> make_evaluator(std::span<const double> poles,
                                                                       double log10_cond) {
    using namespace precision;
    if (log10_cond <= 1.0) return std::make_shared<Evaluator<double>>(poles, 15);
    const double needed = log10_cond + kGuardDigits;
    if (needed <= 50) return std::make_shared<Evaluator<Float50>>(poles, 50);
    if (needed <= 100) return std::make_shared<Evaluator<Float100>>(poles, 100);
    if (needed <= 200) return std::make_shared<Evaluator<Float200>>(poles, 200);
    if (needed <= 400) return std::make_shared<Evaluator<Float400>>(poles, 400);
    throw OverflowError("partial-fraction sum would cancel " + std::to_string(log10_cond) +
                        " digits; beyond the supported 380");
}

bool all_equal(std::span<const double> values, double relative_tolerance) {
    const double ref = values.front();
    return std::all_of(values.begin(), values.end(), [&](double v) {
        return std::abs(v - ref) <= relative_tolerance * std::max(std::abs(v), std::abs(ref));
    });
}

double clamp_probability(double p, const char* what) {
    constexpr double kSlack = 1e-12;
    if (p < 0.0) {
        if (p < -kSlack) throw ConsistencyError(std::string(what) + " fell below 0: " + std::to_string(p));
        return 0.0;
    }
    if (p > 1.0) {
        if (p > 1.0 + kSlack) throw ConsistencyError(std::string(what) + " exceeded 1: " + std::to_string(p));
        return 1.0;
    }
    return p;
}

double direction_sigma_product(const ChannelStats& ch, Direction direction) {
    return direction == Direction::u1_receives ? std::sqrt(ch.var_hr * ch.var_gt)
                                               : std::sqrt(ch.var_gr * ch.var_ht);
}

double constant_scale(const CascadeDistribution& dist) { return 2.0 * std::sqrt(dist.poles.front()); }

// Lower tail of the constant-amplitude CDF. The closed form 1 - 2(u/2)^n K_n(u)/Gamma(n)
// cancels when it is small, so integrate d/du[u^n K_n(u)] = -u^n K_{n-1}(u) instead:
//   F = 2^{1-n}/Gamma(n) * u^{n+1} * int_0^1 t^n K_{n-1}(u t) dt.
double constant_lower_cdf(int n, double u) {
    const double log_prefactor =
        (1 - n) * std::numbers::ln2 - specfun::ln_gamma(n) + (n + 1) * std::log(u);
    auto integrand = [&](double t) {
        if (!(u * t > 0.0)) return 0.0;
        return std::exp(log_prefactor + n * std::log(t) + specfun::log_bessel_kn(n - 1, u * t));
    };
    boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator.integrate(integrand, 0.0, 1.0, 1e-14);
}

}  // namespace

namespace analytic {

CascadeDistribution build_distribution(std::span<const double> poles, double sigma_product) {
    if (poles.empty()) throw DomainError("build_distribution: no poles");
    for (double a : poles) {
        if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("build_distribution: poles must be positive");
    }
    CascadeDistribution dist;
    dist.poles.assign(poles.begin(), poles.end());
    dist.sigma_product = sigma_product;
    dist.n_elements = poles.size();

    // Amplitudes equal within 1e-12 relative means poles equal within ~2e-12.
    if (all_equal(poles, 2e-12)) {
        dist.regime = Regime::constant_amplitude;
        dist.condition = 1.0;
        dist.working_digits = 15;
        return dist;
    }
    return build_general_distribution(poles, sigma_product);
}

CascadeDistribution build_general_distribution(std::span<const double> poles, double sigma_product) {
    if (poles.empty()) throw DomainError("build_distribution: no poles");
    for (double a : poles) {
        if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("build_distribution: poles must be positive");
    }
    CascadeDistribution dist;
    dist.poles.assign(poles.begin(), poles.end());
    dist.sigma_product = sigma_product;
    dist.n_elements = poles.size();

    check_pole_separation(poles);
    const double log10_cond = log10_condition(poles);
    dist.regime = Regime::general;
    dist.condition = std::pow(10.0, log10_cond);
    dist.evaluator = make_evaluator(poles, log10_cond);
    dist.working_digits = dist.evaluator->digits();
    dist.pf_coeffs = dist.evaluator->coefficients();

    const double total = dist.evaluator->total_probability();
    if (!(std::abs(total - 1.0) <= 1e-8)) {
        throw ConsistencyError("partial-fraction total probability is " + std::to_string(total) +
                               " instead of 1");
    }
    return dist;
}

CascadeDistribution build_distribution(const ScenarioConfig& scenario, Direction direction) {
    require_valid(scenario);
    const auto poles = pole_coefficients(scenario.channels, scenario.irs, direction);
    try {
        return build_distribution(poles, direction_sigma_product(scenario.channels, direction));
    } catch (const DegeneratePoles& e) {
        throw DegeneratePoles(e.first(), e.second(),
                              std::string(e.what()) +
                                  " (repeated IRS amplitudes)");
    }
}

double cascade_pdf(const CascadeDistribution& dist, double r) {
    if (!(r >= 0.0) || std::isnan(r)) throw DomainError("cascade_pdf: r must be nonnegative");
    if (r == 0.0) return 0.0;
    if (std::isinf(r)) return 0.0;
    if (dist.regime == Regime::general) return dist.evaluator->pdf(r);

    const int n = static_cast<int>(dist.n_elements);
    const double b = constant_scale(dist);
    const double log_pdf = std::log(4.0) + n * std::log(r) - specfun::ln_gamma(n) -
                           (n + 1) * std::log(b) + specfun::log_bessel_kn(n - 1, 2.0 * r / b);
    return std::exp(log_pdf);
}

double cascade_power_cdf(const CascadeDistribution& dist, double xi) {
    if (!(xi >= 0.0) || std::isnan(xi)) throw DomainError("cascade_power_cdf: xi must be nonnegative");
    if (xi == 0.0) return 0.0;
    if (std::isinf(xi)) return 1.0;
    if (dist.regime == Regime::general) {
        return clamp_probability(dist.evaluator->power_cdf(xi), "cascade_power_cdf");
    }

    const int n = static_cast<int>(dist.n_elements);
    const double u = 2.0 * std::sqrt(xi) / constant_scale(dist);
    const double log_tail = std::numbers::ln2 + n * std::log(u / 2.0) - specfun::ln_gamma(n) +
                            specfun::log_bessel_kn(n, u);
    const double direct = -std::expm1(log_tail);
    if (direct >= 0.1) return clamp_probability(direct, "cascade_power_cdf");
    return clamp_probability(constant_lower_cdf(n, u), "cascade_power_cdf");
}

double outage_user(const ScenarioConfig& scenario, Direction direction) {
    const auto dist = build_distribution(scenario, direction);
    const double threshold =
        equivalent_threshold(receiver(scenario, direction), transmitter(scenario, direction));
    return cascade_power_cdf(dist, threshold);
}

OutageReport outage_system(const ScenarioConfig& scenario) {
    const auto dist1 = build_distribution(scenario, Direction::u1_receives);
    const auto dist2 = build_distribution(scenario, Direction::u2_receives);
    OutageReport report;
    report.regime = dist1.regime;
    report.gamma_prime_1 = equivalent_threshold(scenario.user1, scenario.user2);
    report.gamma_prime_2 = equivalent_threshold(scenario.user2, scenario.user1);
    report.p_user1 = cascade_power_cdf(dist1, report.gamma_prime_1);
    report.p_user2 = cascade_power_cdf(dist2, report.gamma_prime_2);
    report.p_system = report.p_user1 + report.p_user2 - report.p_user1 * report.p_user2;
    if (dist1.regime == Regime::constant_amplitude && dist1.n_elements >= 2) {
        report.approx_system = outage_approx(scenario);
    }
    return report;
}

double outage_approx(double gamma_prime_1, double gamma_prime_2, std::size_t n) {
    if (n < 2) throw DomainError("outage_approx: needs N >= 2");
    return (gamma_prime_1 + gamma_prime_2 - gamma_prime_1 * gamma_prime_2) /
           static_cast<double>(n - 1);
}

double outage_approx_user(double gamma_prime, std::size_t n) {
    if (n < 2) throw DomainError("outage_approx_user: needs N >= 2");
    return gamma_prime / static_cast<double>(n - 1);
}

double outage_approx_union(double gamma_prime_1, double gamma_prime_2, std::size_t n) {
    const double p1 = outage_approx_user(gamma_prime_1, n);
    const double p2 = outage_approx_user(gamma_prime_2, n);
    return 1.0 - (1.0 - p1) * (1.0 - p2);
}

double outage_approx(const ScenarioConfig& scenario) {
    require_valid(scenario);
    std::vector<double> nonzero;
    for (double a : scenario.irs.amplitudes) {
        if (a != 0.0) nonzero.push_back(a);
    }
    if (nonzero.empty()) throw AllZeroAmplitudes("outage_approx: every IRS amplitude is zero");
    if (!all_equal(nonzero, 1e-12)) {
        throw DomainError("outage_approx: requires constant IRS amplitudes");
    }
    const double amp2 = nonzero.front() * nonzero.front();
    const auto& ch = scenario.channels;
    const double mean_power_1 = ch.var_hr * ch.var_gt * amp2;
    const double mean_power_2 = ch.var_gr * ch.var_ht * amp2;
    const double g1 = equivalent_threshold(scenario.user1, scenario.user2) / mean_power_1;
    const double g2 = equivalent_threshold(scenario.user2, scenario.user1) / mean_power_2;
    return outage_approx(g1, g2, nonzero.size());
}

double one_way_outage(const ScenarioConfig& scenario) {
    auto baseline = [&](Direction direction) {
        UserParams rx = receiver(scenario, direction);
        rx.target_rate *= 2.0;
        rx.loop_q = 0.0;
        const auto dist = build_distribution(scenario, direction);
        return cascade_power_cdf(dist, equivalent_threshold(rx, transmitter(scenario, direction)));
    };
    const double p1 = baseline(Direction::u1_receives);
    const double p2 = baseline(Direction::u2_receives);
    return p1 + p2 - p1 * p2;
}

}  // namespace analytic

}  // namespace irsout
