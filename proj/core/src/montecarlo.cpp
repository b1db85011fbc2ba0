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

#include "irsout/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "irsout/errors.hpp"

namespace irsout::mc {
namespace {

struct Complex {
    double re = 0.0;
    double im = 0.0;
};

inline Complex mul(Complex a, Complex b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline Complex draw(NormalStream& stream, double variance) {
    const auto h = stream.complex_normal(variance);
    return {h.real(), h.imag()};
}
inline double norm(Complex z) { return z.re * z.re + z.im * z.im; }

std::vector<Complex> reflection_coefficients(const IrsConfig& irs) {
    std::vector<Complex> theta(irs.size());
    for (std::size_t i = 0; i < irs.size(); ++i) {
        theta[i] = {irs.amplitudes[i] * std::cos(irs.phases[i]), irs.amplitudes[i] * std::sin(irs.phases[i])};
    }
    return theta;
}

struct DirectionVariances {
    double receive;
    double transmit;
};

DirectionVariances variances(const ChannelStats& ch, Direction direction) {
    return direction == Direction::u1_receives ? DirectionVariances{ch.var_hr, ch.var_gt}
                                               : DirectionVariances{ch.var_gr, ch.var_ht};
}

Complex cascade(std::span<const Complex> theta, DirectionVariances v, NormalStream& stream) {
    Complex z;
    for (const Complex& t : theta) {
        const Complex r = draw(stream, v.receive);
        const Complex g = draw(stream, v.transmit);
        const Complex term = mul(mul(r, t), g);
        z.re += term.re;
        z.im += term.im;
    }
    return z;
}

void check_spec(const SimSpec& spec) {
    if (spec.samples < 1) throw DomainError("SimSpec.samples must be >= 1");
    if (spec.chunk_size < 1) throw DomainError("SimSpec.chunk_size must be >= 1");
}

// Runs work(stream, count, tally) once per chunk and returns the tallies in
// chunk order.
template <class Tally, class Work>
std::vector<Tally> run_chunks(const SimSpec& spec, Tally prototype, Work work) {
    check_spec(spec);
    const std::uint64_t chunks = (spec.samples + spec.chunk_size - 1) / spec.chunk_size;
    std::vector<Tally> tallies(chunks, prototype);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto body = [&] {
        try {
            for (;;) {
                const std::uint64_t c = next.fetch_add(1);
                if (c >= chunks) return;
                const std::uint64_t begin = c * spec.chunk_size;
                const std::uint64_t count = std::min(spec.chunk_size, spec.samples - begin);
                NormalStream stream(spec.seed, c);
                work(stream, count, tallies[c]);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(chunks);
        }
    };

    unsigned workers = spec.workers != 0 ? spec.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
    if (workers <= 1) {
        body();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
    }
    if (failure) std::rethrow_exception(failure);
    return tallies;
}

}  // namespace

Estimate proportion(std::uint64_t hits, std::uint64_t n) {
    if (n == 0) throw DomainError("proportion: n must be positive");
    const double p = static_cast<double>(hits) / static_cast<double>(n);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), n};
}

std::complex<double> sample_cascade(const ScenarioConfig& scenario, Direction direction, NormalStream& stream) {
    const auto theta = reflection_coefficients(scenario.irs);
    const Complex z = cascade(theta, variances(scenario.channels, direction), stream);
    return {z.re, z.im};
}

OutageEstimates estimate_outage(const ScenarioConfig& scenario, const SimSpec& spec) {
    require_valid(scenario);
    const auto theta = reflection_coefficients(scenario.irs);
    const ChannelStats& ch = scenario.channels;
    const UserParams& u1 = scenario.user1;
    const UserParams& u2 = scenario.user2;
    // gamma_1 = |h_r^T Theta g_t|^2 P_2 / (sigma_1^2 + q_1 P_1^v_1), and symmetrically.
    const double gain1 = u2.transmit_power() / (u1.noise_var + u1.loop_residual_var());
    const double gain2 = u1.transmit_power() / (u2.noise_var + u2.loop_residual_var());
    const double threshold1 = snr_threshold(u1.target_rate);
    const double threshold2 = snr_threshold(u2.target_rate);

    struct Tally {
        std::uint64_t out1 = 0, out2 = 0, out_any = 0;
    };
    const auto tallies = run_chunks(spec, Tally{}, [&](NormalStream& stream, std::uint64_t count, Tally& t) {
        for (std::uint64_t s = 0; s < count; ++s) {
            Complex z1, z2;
            for (const Complex& th : theta) {
                const Complex ht = draw(stream, ch.var_ht);
                const Complex hr = draw(stream, ch.var_hr);
                const Complex gt = draw(stream, ch.var_gt);
                const Complex gr = draw(stream, ch.var_gr);
                const Complex a = mul(mul(hr, th), gt);
                const Complex b = mul(mul(gr, th), ht);
                z1.re += a.re;
                z1.im += a.im;
                z2.re += b.re;
                z2.im += b.im;
            }
            const bool o1 = norm(z1) * gain1 < threshold1;
            const bool o2 = norm(z2) * gain2 < threshold2;
            t.out1 += o1;
            t.out2 += o2;
            t.out_any += (o1 || o2);
        }
    });

    Tally total;
    for (const auto& t : tallies) {
        total.out1 += t.out1;
        total.out2 += t.out2;
        total.out_any += t.out_any;
    }
    return {proportion(total.out1, spec.samples), proportion(total.out2, spec.samples),
            proportion(total.out_any, spec.samples)};
}

std::vector<Estimate> empirical_cdf(const ScenarioConfig& scenario, Direction direction, const SimSpec& spec,
                                    std::span<const double> grid) {
    require_valid(scenario);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (!(grid[k] >= 0.0)) throw DomainError("empirical_cdf: grid must be nonnegative");
        if (k > 0 && grid[k] < grid[k - 1]) throw DomainError("empirical_cdf: grid must be nondecreasing");
    }
    const auto theta = reflection_coefficients(scenario.irs);
    const auto v = variances(scenario.channels, direction);

    using Tally = std::vector<std::uint64_t>;
    const auto tallies = run_chunks(spec, Tally(grid.size() + 1, 0), [&](NormalStream& stream, std::uint64_t count, Tally& t) {
        for (std::uint64_t s = 0; s < count; ++s) {
            const double power = norm(cascade(theta, v, stream));
            const auto slot = std::lower_bound(grid.begin(), grid.end(), power) - grid.begin();
            ++t[static_cast<std::size_t>(slot)];
        }
    });

    std::vector<std::uint64_t> buckets(grid.size() + 1, 0);
    for (const auto& t : tallies) {
        for (std::size_t k = 0; k < buckets.size(); ++k) buckets[k] += t[k];
    }
    std::vector<Estimate> out;
    out.reserve(grid.size());
    std::uint64_t running = 0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        running += buckets[k];
        out.push_back(proportion(running, spec.samples));
    }
    return out;
}

std::vector<HistogramBin> histogram_pdf(const ScenarioConfig& scenario, Direction direction, const SimSpec& spec,
                                        std::size_t bins, double r_max) {
    require_valid(scenario);
    if (bins < 1) throw DomainError("histogram_pdf: bins must be >= 1");
    if (!(r_max > 0.0) || !std::isfinite(r_max)) throw DomainError("histogram_pdf: r_max must be positive");
    const auto theta = reflection_coefficients(scenario.irs);
    const auto v = variances(scenario.channels, direction);
    const double width = r_max / static_cast<double>(bins);

    using Tally = std::vector<std::uint64_t>;
    const auto tallies = run_chunks(spec, Tally(bins, 0), [&](NormalStream& stream, std::uint64_t count, Tally& t) {
        for (std::uint64_t s = 0; s < count; ++s) {
            const double magnitude = std::sqrt(norm(cascade(theta, v, stream)));
            const double slot = std::floor(magnitude / width);
            if (slot < static_cast<double>(bins)) ++t[static_cast<std::size_t>(slot)];
        }
    });

    std::vector<HistogramBin> out(bins);
    for (std::size_t b = 0; b < bins; ++b) {
        std::uint64_t count = 0;
        for (const auto& t : tallies) count += t[b];
        const Estimate mass = proportion(count, spec.samples);
        out[b] = {(static_cast<double>(b) + 0.5) * width, {mass.value / width, mass.std_error / width, mass.n}};
    }
    return out;
}

Estimate mean_cascade_power(const ScenarioConfig& scenario, Direction direction, const SimSpec& spec) {
    require_valid(scenario);
    const auto theta = reflection_coefficients(scenario.irs);
    const auto v = variances(scenario.channels, direction);

    struct Tally {
        double sum = 0.0, sum_squares = 0.0;
    };
    const auto tallies = run_chunks(spec, Tally{}, [&](NormalStream& stream, std::uint64_t count, Tally& t) {
        for (std::uint64_t s = 0; s < count; ++s) {
            const double power = norm(cascade(theta, v, stream));
            t.sum += power;
            t.sum_squares += power * power;
        }
    });

    Tally total;
    for (const auto& t : tallies) {
        total.sum += t.sum;
        total.sum_squares += t.sum_squares;
    }
    const double n = static_cast<double>(spec.samples);
    const double mean = total.sum / n;
    const double variance = std::max(0.0, total.sum_squares / n - mean * mean);
    return {mean, std::sqrt(variance / n), spec.samples};
}

}  // namespace irsout::mc
