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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "irsout/analytic.hpp"
#include "irsout/errors.hpp"
#include "irsout/montecarlo.hpp"
#include "irsout/oracle.hpp"
#include "irsout/scenario_io.hpp"
#include "table.hpp"

#ifndef IRSOUT_VERSION
#define IRSOUT_VERSION "0.0.0"
#endif

namespace irsout::cli {
namespace {

constexpr std::string_view kToolName = "irs-outage";
constexpr double kPresetLoopResidual = 1e-4;
// |z| > 4 standard errors fails verification.
constexpr double kZScoreLimit = 4.0;
// Fewer expected events than this on either side makes a binomial z-score
// meaningless.
constexpr double kMinExpectedEvents = 5.0;

enum class Format { csv, json };

struct GlobalOptions {
    std::uint64_t seed = 1;
    std::uint64_t samples = 1'000'000;
    std::string format;
    std::string out_path;
    bool oracle_fallback = false;
    unsigned workers = 0;

    Format format_or(Format fallback) const {
        if (format.empty()) return fallback;
        return format == "json" ? Format::json : Format::csv;
    }
    mc::SimSpec sim_spec() const {
        mc::SimSpec spec;
        spec.samples = samples;
        spec.seed = seed;
        spec.workers = workers;
        return spec;
    }
};

std::string tool_version() { return std::string(kToolName) + " " + IRSOUT_VERSION; }

void emit(const std::string& text, const GlobalOptions& g, std::ostream& out) {
    if (g.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(g.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw ValidationError({"cannot open --out file " + g.out_path});
    file << text;
    if (!file) throw ValidationError({"failed writing --out file " + g.out_path});
}

void emit_table(const Table& table, Format format, const GlobalOptions& g, std::ostream& out) {
    std::ostringstream text;
    if (format == Format::json) {
        write_json(table, text);
    } else {
        write_csv(table, text);
    }
    emit(text.str(), g, out);
}

Table new_table(std::string_view command, const GlobalOptions& g) {
    Table t;
    t.metadata = {{"tool", tool_version()}, {"command", std::string(command)},
                  {"seed", std::to_string(g.seed)}, {"samples", std::to_string(g.samples)}};
    return t;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

std::vector<std::string> parse_outputs(const std::string& text, const std::vector<std::string>& allowed,
                                       std::string_view what) {
    auto items = split_list(text);
    std::vector<std::string> problems;
    if (items.empty()) problems.push_back(std::string(what) + ": at least one output is required");
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (std::find(allowed.begin(), allowed.end(), items[i]) == allowed.end()) {
            problems.push_back(std::string(what) + ": unknown output '" + items[i] + "'");
        }
        if (std::find(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(i), items[i]) !=
            items.begin() + static_cast<std::ptrdiff_t>(i)) {
            problems.push_back(std::string(what) + ": output '" + items[i] + "' listed twice");
        }
    }
    if (!problems.empty()) throw ValidationError(std::move(problems));
    return items;
}

bool contains(const std::vector<std::string>& items, std::string_view name) {
    return std::find(items.begin(), items.end(), name) != items.end();
}

std::vector<double> linspace(double from, double to, int steps) {
    std::vector<double> grid(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) grid[k] = from + (to - from) * k / (steps - 1);
    grid.back() = to;
    return grid;
}

void check_range(double from, double to, int steps, std::string_view what) {
    std::vector<std::string> problems;
    if (steps < 2) problems.push_back(std::string(what) + ": steps must be >= 2");
    if (!(from < to)) problems.push_back(std::string(what) + ": from must be below to");
    if (!std::isfinite(from) || !std::isfinite(to)) problems.push_back(std::string(what) + ": bounds must be finite");
    if (!problems.empty()) throw ValidationError(std::move(problems));
}

// ---------------------------------------------------------------------------
// Outage evaluation shared by the commands.

struct SystemOutage {
    double p_user1 = 0.0;
    double p_user2 = 0.0;
    double p_system = 0.0;
    double gamma_prime_1 = 0.0;
    double gamma_prime_2 = 0.0;
    std::string regime;
    std::optional<double> approx_system;
};

double oracle_user_outage(const ScenarioConfig& s, Direction d) {
    const auto poles = pole_coefficients(s.channels, s.irs, d);
    return oracle::cdf_via_quadrature(poles, equivalent_threshold(receiver(s, d), transmitter(s, d)));
}

SystemOutage oracle_outage(const ScenarioConfig& s) {
    SystemOutage o;
    o.gamma_prime_1 = equivalent_threshold(s.user1, s.user2);
    o.gamma_prime_2 = equivalent_threshold(s.user2, s.user1);
    o.p_user1 = oracle_user_outage(s, Direction::u1_receives);
    o.p_user2 = oracle_user_outage(s, Direction::u2_receives);
    o.p_system = o.p_user1 + o.p_user2 - o.p_user1 * o.p_user2;
    o.regime = "oracle";
    return o;
}

SystemOutage evaluate(const ScenarioConfig& s, bool oracle_fallback) {
    try {
        const OutageReport r = analytic::outage_system(s);
        return {r.p_user1, r.p_user2, r.p_system, r.gamma_prime_1, r.gamma_prime_2,
                std::string(to_string(r.regime)), r.approx_system};
    } catch (const DegeneratePoles&) {
        if (!oracle_fallback) throw;
        return oracle_outage(s);
    }
}

ScenarioDefinition with_rho_db(ScenarioDefinition def, double db) {
    def.user1.transmit_snr = def.user2.transmit_snr = db_to_linear(db);
    return def;
}

ScenarioConfig load_valid(const std::string& path) {
    ScenarioConfig scenario = load_scenario(path).expand();
    require_valid(scenario);
    return scenario;
}

// ---------------------------------------------------------------------------
// analytic

int cmd_analytic(const std::string& path, bool echo_config, const GlobalOptions& g, std::ostream& out) {
    const ScenarioConfig scenario = load_valid(path);
    if (echo_config) {
        emit(scenario_to_json(scenario) + "\n", g, out);
        return kExitOk;
    }
    const SystemOutage o = evaluate(scenario, g.oracle_fallback);

    if (g.format_or(Format::json) == Format::csv) {
        Table t = new_table("analytic", g);
        t.metadata.push_back({"scenario_digest", scenario_digest(scenario)});
        t.columns = {"p_user1", "p_user2", "p_system", "gamma_prime_1", "gamma_prime_2", "regime", "approx_system"};
        t.add_row({o.p_user1, o.p_user2, o.p_system, o.gamma_prime_1, o.gamma_prime_2, o.regime,
                   o.approx_system.value_or(std::nan(""))});
        emit_table(t, Format::csv, g, out);
        return kExitOk;
    }
    nlohmann::ordered_json doc;
    doc["p_user1"] = o.p_user1;
    doc["p_user2"] = o.p_user2;
    doc["p_system"] = o.p_system;
    doc["gamma_prime_1"] = o.gamma_prime_1;
    doc["gamma_prime_2"] = o.gamma_prime_2;
    doc["regime"] = o.regime;
    if (o.approx_system) doc["approx_system"] = *o.approx_system;
    doc["n_elements"] = scenario.irs.size();
    doc["scenario_digest"] = scenario_digest(scenario);
    doc["tool"] = tool_version();
    emit(doc.dump(2) + "\n", g, out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    bool with_oracle = false;
    double analytic_bias = 0.0;  // harness self-test hook
};

int cmd_verify(const std::string& path, const VerifyOptions& v, const GlobalOptions& g, std::ostream& out,
               std::ostream& err) {
    const ScenarioConfig scenario = load_valid(path);
    const SystemOutage a = evaluate(scenario, g.oracle_fallback);
    std::optional<SystemOutage> o;
    if (v.with_oracle) o = oracle_outage(scenario);
    const mc::OutageEstimates est = mc::estimate_outage(scenario, g.sim_spec());
    const double n = static_cast<double>(g.samples);

    struct Check {
        std::string name;
        double analytic;
        double mc;
        double oracle;
    };
    const double independent = est.user1.value + est.user2.value - est.user1.value * est.user2.value;
    const std::vector<Check> checks = {
        {"user1", a.p_user1, est.user1.value, o ? o->p_user1 : std::nan("")},
        {"user2", a.p_user2, est.user2.value, o ? o->p_user2 : std::nan("")},
        {"system", a.p_system, est.system.value, o ? o->p_system : std::nan("")},
        {"system_independent", a.p_system, independent, o ? o->p_system : std::nan("")},
    };

    Table t = new_table("verify", g);
    t.metadata.push_back({"scenario_digest", scenario_digest(scenario)});
    t.metadata.push_back({"regime", a.regime});
    t.columns = {"quantity", "analytic", "mc", "std_error", "z_score"};
    if (o) t.columns.push_back("oracle");
    t.columns.push_back("status");

    bool failed = false;
    for (const Check& c : checks) {
        const double p = c.analytic + v.analytic_bias;
        const double se = std::sqrt(std::max(0.0, p * (1.0 - p)) / n);
        double z = 0.0;
        if (se > 0.0) {
            z = (c.mc - p) / se;
        } else if (c.mc != p) {
            z = c.mc > p ? INFINITY : -INFINITY;
        }
        std::string status = "ok";
        if (n * p < kMinExpectedEvents || n * (1.0 - p) < kMinExpectedEvents) {
            status = "inconclusive";
            err << "warning: " << c.name << ": fewer than " << kMinExpectedEvents
                << " expected events; std_error dominates the comparison\n";
        } else if (!(std::abs(z) <= kZScoreLimit)) {
            status = "FAIL";
            failed = true;
        }
        std::vector<Cell> row{c.name, p, c.mc, se, z};
        if (o) row.emplace_back(c.oracle);
        row.emplace_back(status);
        t.add_row(std::move(row));
    }
    t.metadata.push_back({"verdict", failed ? "fail" : "pass"});
    emit_table(t, g.format_or(Format::csv), g, out);
    if (failed) err << "verification failed: |z| > " << kZScoreLimit << '\n';
    return failed ? kExitVerificationFailed : kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOptions {
    std::string param;
    double from = 0.0;
    double to = 0.0;
    int steps = 0;
    std::string outputs = "analytic";
};

ScenarioDefinition apply_sweep(const ScenarioDefinition& base, std::string_view param, double x) {
    if (param == "rho_db") return with_rho_db(base, x);
    if (param == "rate") {
        ScenarioDefinition def = base;
        def.user1.target_rate = def.user2.target_rate = x;
        return def;
    }
    return base.with_elements(static_cast<std::size_t>(std::llround(x)));
}

int cmd_sweep(const std::string& path, const SweepOptions& s, const GlobalOptions& g, std::ostream& out) {
    const ScenarioDefinition base = load_scenario(path);
    const auto outputs = parse_outputs(s.outputs, {"analytic", "approx", "mc", "oracle", "one_way"}, "--outputs");
    check_range(s.from, s.to, s.steps, "sweep");
    const auto grid = linspace(s.from, s.to, s.steps);
    if (s.param == "n_elements") {
        std::vector<std::string> problems;
        for (double x : grid) {
            if (x != std::round(x) || x < 1.0) {
                problems.push_back("sweep: n_elements grid point " + format_double(x) +
                                   " is not a positive integer; choose from/to/steps accordingly");
            }
        }
        if (!problems.empty()) throw ValidationError(std::move(problems));
    }

    Table t = new_table("sweep", g);
    t.metadata.push_back({"scenario_digest", scenario_digest(base.expand())});
    t.metadata.push_back({"param", s.param});
    t.columns = {s.param};
    for (const auto& name : outputs) {
        t.columns.push_back(name);
        if (name == "mc") t.columns.push_back("mc_std_error");
    }

    for (double x : grid) {
        const ScenarioConfig scenario = apply_sweep(base, s.param, x).expand();
        require_valid(scenario);
        std::vector<Cell> row{x};
        for (const auto& name : outputs) {
            if (name == "analytic") {
                row.emplace_back(evaluate(scenario, g.oracle_fallback).p_system);
            } else if (name == "approx") {
                row.emplace_back(analytic::outage_approx(scenario));
            } else if (name == "oracle") {
                row.emplace_back(oracle_outage(scenario).p_system);
            } else if (name == "one_way") {
                row.emplace_back(analytic::one_way_outage(scenario));
            } else {
                const auto est = mc::estimate_outage(scenario, g.sim_spec()).system;
                row.emplace_back(est.value);
                row.emplace_back(est.std_error);
            }
        }
        t.add_row(std::move(row));
    }
    emit_table(t, g.format_or(Format::csv), g, out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// dist

struct DistOptions {
    std::string direction = "u1";
    std::string grid;
    std::string outputs = "analytic";
};

struct GridSpec {
    double from;
    double to;
    int steps;
};

GridSpec parse_grid(const std::string& text) {
    const auto bad = [&] { return ValidationError({"--grid: expected from:to:steps, got '" + text + "'"}); };
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? first : text.find(':', first + 1);
    if (second == std::string::npos) throw bad();
    GridSpec spec{};
    try {
        std::size_t used = 0;
        spec.from = std::stod(text.substr(0, first), &used);
        if (used != first) throw bad();
        spec.to = std::stod(text.substr(first + 1, second - first - 1), &used);
        if (used != second - first - 1) throw bad();
        spec.steps = std::stoi(text.substr(second + 1), &used);
        if (used != text.size() - second - 1) throw bad();
    } catch (const std::logic_error&) {
        throw bad();
    }
    check_range(spec.from, spec.to, spec.steps, "--grid");
    if (spec.from < 0.0) throw ValidationError({"--grid: r must be nonnegative"});
    return spec;
}

int cmd_dist(const std::string& path, const DistOptions& d, const GlobalOptions& g, std::ostream& out) {
    const ScenarioConfig scenario = load_valid(path);
    const Direction direction = direction_from_string(d.direction);
    const auto outputs = parse_outputs(d.outputs, {"analytic", "oracle", "mc"}, "--outputs");
    const GridSpec spec = parse_grid(d.grid);
    const auto r = linspace(spec.from, spec.to, spec.steps);
    const bool want_analytic = contains(outputs, "analytic");
    const bool want_oracle = contains(outputs, "oracle");
    const bool want_mc = contains(outputs, "mc");
    const auto poles = pole_coefficients(scenario.channels, scenario.irs, direction);

    // Closed forms, or the oracle standing in for them under --oracle-fallback.
    std::optional<CascadeDistribution> dist;
    bool analytic_via_oracle = false;
    if (want_analytic) {
        try {
            dist = analytic::build_distribution(scenario, direction);
        } catch (const DegeneratePoles&) {
            if (!g.oracle_fallback) throw;
            analytic_via_oracle = true;
        }
    }

    // Monte Carlo: one shared sample set for the CDF at r^2 and for the
    // density, estimated as the mass of a window of one grid spacing around r.
    const double half_width = 0.5 * (spec.to - spec.from) / (spec.steps - 1);
    std::vector<double> mc_grid;
    std::vector<mc::Estimate> mc_cdf;
    if (want_mc) {
        for (double x : r) {
            const double lo = std::max(0.0, x - half_width);
            const double hi = x + half_width;
            mc_grid.insert(mc_grid.end(), {x * x, lo * lo, hi * hi});
        }
        std::sort(mc_grid.begin(), mc_grid.end());
        mc_grid.erase(std::unique(mc_grid.begin(), mc_grid.end()), mc_grid.end());
        mc_cdf = mc::empirical_cdf(scenario, direction, g.sim_spec(), mc_grid);
    }
    const auto mc_at = [&](double xi) {
        const auto k = std::lower_bound(mc_grid.begin(), mc_grid.end(), xi) - mc_grid.begin();
        return mc_cdf[static_cast<std::size_t>(k)].value;
    };

    Table t = new_table("dist", g);
    t.metadata.push_back({"scenario_digest", scenario_digest(scenario)});
    t.metadata.push_back({"direction", std::string(to_string(direction))});
    if (dist) t.metadata.push_back({"regime", std::string(to_string(dist->regime))});
    if (analytic_via_oracle) t.metadata.push_back({"regime", "oracle"});
    t.columns = {"r"};
    if (want_analytic) t.columns.push_back("pdf_analytic");
    if (want_oracle) t.columns.push_back("pdf_oracle");
    if (want_mc) t.columns.insert(t.columns.end(), {"pdf_mc", "pdf_mc_std_error"});
    t.columns.push_back("xi");
    if (want_analytic) t.columns.push_back("cdf_analytic");
    if (want_oracle) t.columns.push_back("cdf_oracle");
    if (want_mc) t.columns.insert(t.columns.end(), {"cdf_mc", "cdf_mc_std_error"});

    const double n = static_cast<double>(g.samples);
    for (double x : r) {
        const double xi = x * x;
        std::vector<Cell> row{x};
        if (want_analytic) {
            row.emplace_back(dist ? analytic::cascade_pdf(*dist, x) : oracle::pdf_via_quadrature(poles, x));
        }
        if (want_oracle) row.emplace_back(oracle::pdf_via_quadrature(poles, x));
        if (want_mc) {
            const double lo = std::max(0.0, x - half_width);
            const double hi = x + half_width;
            const double mass = mc_at(hi * hi) - mc_at(lo * lo);
            row.emplace_back(mass / (hi - lo));
            row.emplace_back(std::sqrt(std::max(0.0, mass * (1.0 - mass)) / n) / (hi - lo));
        }
        row.emplace_back(xi);
        if (want_analytic) {
            row.emplace_back(dist ? analytic::cascade_power_cdf(*dist, xi) : oracle::cdf_via_quadrature(poles, xi));
        }
        if (want_oracle) row.emplace_back(oracle::cdf_via_quadrature(poles, xi));
        if (want_mc) {
            const double p = mc_at(xi);
            row.emplace_back(p);
            row.emplace_back(std::sqrt(p * (1.0 - p) / n));
        }
        t.add_row(std::move(row));
    }
    emit_table(t, g.format_or(Format::csv), g, out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// fig-preset

struct PresetOptions {
    std::string name;
    double from = 0.0;
    double to = 30.0;
    int steps = 16;
    bool no_mc = false;
};

ScenarioDefinition preset_definition(std::size_t n, AmplitudeProfile profile, double loop_v, double rate,
                                     std::uint64_t seed) {
    ScenarioDefinition def;
    def.n = n;
    def.amplitude_profile = profile;
    def.phase_profile = PhaseProfile::random;
    def.phase_seed = seed;
    for (UserParams* u : {&def.user1, &def.user2}) {
        u->noise_var = 1.0;
        u->target_rate = rate;
        u->loop_q = kPresetLoopResidual;
        u->loop_v = loop_v;
    }
    return def;
}

int cmd_fig_preset(const PresetOptions& p, const GlobalOptions& g, std::ostream& out) {
    check_range(p.from, p.to, p.steps, "fig-preset");
    const auto rho = linspace(p.from, p.to, p.steps);
    Table t = new_table("fig-preset", g);
    t.metadata.push_back({"preset", p.name});
    t.columns = {"rho_db"};

    // Each column is one scenario family evaluated along the rho grid.
    using Column = std::function<std::vector<Cell>(const ScenarioConfig&)>;
    struct Series {
        ScenarioDefinition def;
        Column eval;
    };
    std::vector<Series> series;
    const auto two_way = [&](const ScenarioConfig& s) {
        return std::vector<Cell>{evaluate(s, g.oracle_fallback).p_system};
    };

    if (p.name == "fig2") {
        const bool mc = !p.no_mc;
        for (std::size_t n : {4u, 16u, 64u}) {
            const std::string tag = "N" + std::to_string(n);
            t.columns.push_back(tag + "_analytic");
            if (mc) t.columns.insert(t.columns.end(), {tag + "_mc", tag + "_mc_std_error"});
            series.push_back({preset_definition(n, AmplitudeProfile::linear, 0.0, 1.0, g.seed),
                              [&, mc](const ScenarioConfig& s) {
                                  std::vector<Cell> cells{evaluate(s, g.oracle_fallback).p_system};
                                  if (mc) {
                                      const auto est = mc::estimate_outage(s, g.sim_spec()).system;
                                      cells.emplace_back(est.value);
                                      cells.emplace_back(est.std_error);
                                  }
                                  return cells;
                              }});
        }
    } else if (p.name == "fig3") {
        for (double rate : {1.0, 8.0, 16.0}) {
            const std::string tag = "R" + format_double(rate);
            t.columns.insert(t.columns.end(), {tag + "_two_way", tag + "_one_way"});
            series.push_back({preset_definition(64, AmplitudeProfile::constant, 0.0, rate, g.seed),
                              [&](const ScenarioConfig& s) {
                                  return std::vector<Cell>{evaluate(s, g.oracle_fallback).p_system,
                                                           analytic::one_way_outage(s)};
                              }});
        }
    } else if (p.name == "fig4") {
        for (std::size_t n : {8u, 16u, 32u, 64u, 128u}) {
            for (double v : {0.0, 1.0}) {
                for (auto [profile, label] : {std::pair{AmplitudeProfile::constant, "constant"},
                                              std::pair{AmplitudeProfile::linear, "variable"}}) {
                    t.columns.push_back("N" + std::to_string(n) + "_" + label + "_v" + format_double(v));
                    series.push_back({preset_definition(n, profile, v, 1.0, g.seed), two_way});
                }
            }
        }
    } else {
        throw ValidationError({"fig-preset: unknown preset '" + p.name + "'"});
    }

    for (double db : rho) {
        std::vector<Cell> row{db};
        for (const Series& s : series) {
            const ScenarioConfig scenario = with_rho_db(s.def, db).expand();
            require_valid(scenario);
            const auto cells = s.eval(scenario);
            row.insert(row.end(), cells.begin(), cells.end());
        }
        t.add_row(std::move(row));
    }
    emit_table(t, g.format_or(Format::csv), g, out);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Outage probability of IRS-assisted full-duplex two-way links", std::string(kToolName)};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version());

    GlobalOptions g;
    app.add_option("--seed", g.seed, "Monte Carlo seed")->capture_default_str();
    app.add_option("--samples", g.samples, "Monte Carlo realizations")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", g.out_path, "Write output to this file instead of standard output");
    app.add_flag("--oracle-fallback", g.oracle_fallback,
                 "Evaluate through the quadrature oracle when amplitudes repeat");
    app.add_option("--workers", g.workers, "Monte Carlo threads (0 = all cores); never changes results")
        ->capture_default_str();

    std::string scenario_path;

    bool echo_config = false;
    auto* analytic = app.add_subcommand("analytic", "Closed-form outage report as JSON");
    analytic->add_option("scenario", scenario_path, "Scenario file")->required();
    analytic->add_flag("--echo-config", echo_config, "Print the expanded scenario file instead");

    VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "Compare closed forms against Monte Carlo");
    verify->add_option("scenario", scenario_path, "Scenario file")->required();
    verify->add_flag("--with-oracle", verify_opts.with_oracle, "Add the quadrature oracle column");
    verify->add_option("--bias-analytic", verify_opts.analytic_bias)->group("");

    SweepOptions sweep_opts;
    auto* sweep = app.add_subcommand("sweep", "Sweep one parameter and tabulate outage");
    sweep->add_option("scenario", scenario_path, "Scenario file")->required();
    sweep->add_option("--param", sweep_opts.param, "Swept parameter")
        ->required()
        ->check(CLI::IsMember({"rho_db", "n_elements", "rate"}));
    sweep->add_option("--from", sweep_opts.from)->required();
    sweep->add_option("--to", sweep_opts.to)->required();
    sweep->add_option("--steps", sweep_opts.steps)->required();
    sweep->add_option("--outputs", sweep_opts.outputs, "Comma list of analytic,approx,mc,oracle,one_way")
        ->capture_default_str();

    DistOptions dist_opts;
    auto* dist = app.add_subcommand("dist", "Tabulate the cascade-channel PDF and CDF");
    dist->add_option("scenario", scenario_path, "Scenario file")->required();
    dist->add_option("--direction", dist_opts.direction)->check(CLI::IsMember({"u1", "u2"}))->capture_default_str();
    dist->add_option("--grid", dist_opts.grid, "r grid as from:to:steps")->required();
    dist->add_option("--outputs", dist_opts.outputs, "Comma list of analytic,oracle,mc")->capture_default_str();

    PresetOptions preset_opts;
    auto* preset = app.add_subcommand("fig-preset", "Preset experiment grids");
    preset->add_option("name", preset_opts.name, "fig2, fig3 or fig4")
        ->required()
        ->check(CLI::IsMember({"fig2", "fig3", "fig4"}));
    preset->add_option("--from", preset_opts.from, "First rho in dB")->capture_default_str();
    preset->add_option("--to", preset_opts.to, "Last rho in dB")->capture_default_str();
    preset->add_option("--steps", preset_opts.steps)->capture_default_str();
    preset->add_flag("--no-mc", preset_opts.no_mc, "Skip Monte Carlo columns (fig2)");

    for (auto* sub : {analytic, verify, sweep, dist, preset}) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (*analytic) return cmd_analytic(scenario_path, echo_config, g, out);
        if (*verify) return cmd_verify(scenario_path, verify_opts, g, out, err);
        if (*sweep) return cmd_sweep(scenario_path, sweep_opts, g, out);
        if (*dist) return cmd_dist(scenario_path, dist_opts, g, out);
        return cmd_fig_preset(preset_opts, g, out);
    } catch (const DegeneratePoles& e) {
        err << "error: " << e.what() << "\nhint: pass --oracle-fallback to evaluate through the quadrature oracle\n";
        return kExitDegeneratePoles;
    } catch (const ValidationError& e) {
        for (const auto& d : e.diagnostics()) err << "invalid: " << d << '\n';
        return kExitInvalidInput;
    } catch (const DomainError& e) {
        err << "invalid: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const AllZeroAmplitudes& e) {
        err << "invalid: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumericalFailure;
    }
}

}  // namespace irsout::cli
