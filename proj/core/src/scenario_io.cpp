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

#include "irsout/scenario_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "irsout/errors.hpp"

namespace irsout {
namespace {

using nlohmann::json;

class Reader {
public:
    std::vector<std::string> problems;

    double number(const json& obj, const char* key, const std::string& path, double fallback,
                  bool required) {
        if (!obj.contains(key)) {
            if (required) problems.push_back(path + "." + key + " is required");
            return fallback;
        }
        const json& v = obj.at(key);
        if (!v.is_number()) {
            problems.push_back(path + "." + key + " must be a number");
            return fallback;
        }
        return v.get<double>();
    }

    std::vector<double> number_array(const json& v, const std::string& path) {
        std::vector<double> out;
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (!v[k].is_number()) {
                problems.push_back(path + "[" + std::to_string(k) + "] must be a number");
                out.push_back(0.0);
            } else {
                out.push_back(v[k].get<double>());
            }
        }
        return out;
    }

    UserParams user(const json& obj, const std::string& path) {
        UserParams u;
        if (!obj.is_object()) {
            problems.push_back(path + " must be an object");
            return u;
        }
        const bool has_db = obj.contains("rho_db");
        const bool has_linear = obj.contains("rho");
        if (has_db == has_linear) {
            problems.push_back(path + " needs exactly one of rho_db or rho");
        } else if (has_db) {
            u.transmit_snr = db_to_linear(number(obj, "rho_db", path, 0.0, true));
        } else {
            u.transmit_snr = number(obj, "rho", path, 1.0, true);
        }
        u.noise_var = number(obj, "noise_var", path, 1.0, false);
        u.target_rate = number(obj, "rate", path, 1.0, true);
        u.loop_q = number(obj, "loop_q", path, 0.0, false);
        u.loop_v = number(obj, "loop_v", path, 0.0, false);
        return u;
    }
};

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

}  // namespace

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

ScenarioConfig ScenarioDefinition::expand() const {
    ScenarioConfig s;
    switch (amplitude_profile) {
        case AmplitudeProfile::constant: s.irs.amplitudes = constant_amplitudes(n); break;
        case AmplitudeProfile::linear: s.irs.amplitudes = linear_amplitudes(n); break;
        case AmplitudeProfile::explicit_values: s.irs.amplitudes = amplitudes; break;
    }
    s.irs.phases = phase_profile == PhaseProfile::random ? random_phases(n, phase_seed) : phases;
    s.channels = channels;
    s.user1 = user1;
    s.user2 = user2;
    return s;
}

ScenarioDefinition ScenarioDefinition::with_elements(std::size_t elements) const {
    if (elements == n) return *this;
    if (amplitude_profile == AmplitudeProfile::explicit_values ||
        phase_profile == PhaseProfile::explicit_values) {
        throw DomainError(
            "cannot change the element count of a scenario with explicit amplitude or phase arrays");
    }
    if (elements == 0) throw DomainError("element count must be at least 1");
    ScenarioDefinition out = *this;
    out.n = elements;
    return out;
}

ScenarioDefinition parse_scenario(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError({std::string("scenario: JSON parse error: ") + e.what()});
    }
    if (!doc.is_object()) throw ValidationError({"scenario: top level must be an object"});

    Reader r;
    ScenarioDefinition def;

    const json irs = doc.value("irs", json::object());
    if (!irs.is_object()) {
        r.problems.emplace_back("irs must be an object");
    } else {
        const json amps = irs.value("amplitudes", json("constant"));
        std::size_t implied_n = 0;
        if (amps.is_string()) {
            const auto name = amps.get<std::string>();
            if (name == "constant") def.amplitude_profile = AmplitudeProfile::constant;
            else if (name == "linear") def.amplitude_profile = AmplitudeProfile::linear;
            else r.problems.push_back("irs.amplitudes must be \"constant\", \"linear\" or an array");
        } else if (amps.is_array()) {
            def.amplitude_profile = AmplitudeProfile::explicit_values;
            def.amplitudes = r.number_array(amps, "irs.amplitudes");
            implied_n = def.amplitudes.size();
        } else {
            r.problems.emplace_back("irs.amplitudes must be \"constant\", \"linear\" or an array");
        }

        const json phases = irs.value("phases", json("random"));
        if (phases.is_string()) {
            if (phases.get<std::string>() == "random") def.phase_profile = PhaseProfile::random;
            else r.problems.emplace_back("irs.phases must be \"random\" or an array");
        } else if (phases.is_array()) {
            def.phase_profile = PhaseProfile::explicit_values;
            def.phases = r.number_array(phases, "irs.phases");
            if (implied_n == 0) implied_n = def.phases.size();
        } else {
            r.problems.emplace_back("irs.phases must be \"random\" or an array");
        }

        if (irs.contains("phase_seed")) {
            const json& seed = irs.at("phase_seed");
            if (seed.is_number_unsigned()) def.phase_seed = seed.get<std::uint64_t>();
            else if (seed.is_number_integer() && seed.get<std::int64_t>() >= 0)
                def.phase_seed = static_cast<std::uint64_t>(seed.get<std::int64_t>());
            else r.problems.emplace_back("irs.phase_seed must be a nonnegative integer");
        }

        if (irs.contains("n")) {
            const json& n = irs.at("n");
            if (!n.is_number_integer() || n.get<std::int64_t>() < 1) {
                r.problems.emplace_back("irs.n must be a positive integer");
            } else {
                def.n = static_cast<std::size_t>(n.get<std::int64_t>());
                if (implied_n != 0 && implied_n != def.n) {
                    r.problems.push_back("irs.n = " + std::to_string(def.n) +
                                         " does not match explicit array length " +
                                         std::to_string(implied_n));
                }
            }
        } else if (implied_n != 0) {
            def.n = implied_n;
        } else {
            r.problems.emplace_back("irs.n is required when amplitudes and phases are generated");
        }
    }

    const json channels = doc.value("channels", json::object());
    if (!channels.is_object()) {
        r.problems.emplace_back("channels must be an object");
    } else {
        def.channels.var_ht = r.number(channels, "var_ht", "channels", 1.0, false);
        def.channels.var_hr = r.number(channels, "var_hr", "channels", 1.0, false);
        def.channels.var_gt = r.number(channels, "var_gt", "channels", 1.0, false);
        def.channels.var_gr = r.number(channels, "var_gr", "channels", 1.0, false);
    }

    if (!doc.contains("users") || !doc.at("users").is_array() || doc.at("users").size() != 2) {
        r.problems.emplace_back("users must be an array of exactly two user objects");
    } else {
        def.user1 = r.user(doc.at("users")[0], "users[0]");
        def.user2 = r.user(doc.at("users")[1], "users[1]");
    }

    if (r.problems.empty()) {
        for (auto& diag : validate(def.expand())) r.problems.push_back(std::move(diag));
    }
    if (!r.problems.empty()) throw ValidationError(std::move(r.problems));
    return def;
}

ScenarioDefinition load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError({"cannot open scenario file " + path.string()});
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

std::string scenario_to_json(const ScenarioConfig& scenario) {
    auto user = [](const UserParams& u) {
        return json{{"rho", u.transmit_snr},     {"noise_var", u.noise_var},
                    {"rate", u.target_rate},     {"loop_q", u.loop_q},
                    {"loop_v", u.loop_v}};
    };
    json doc{
        {"irs",
         {{"n", scenario.irs.size()},
          {"amplitudes", scenario.irs.amplitudes},
          {"phases", scenario.irs.phases}}},
        {"channels",
         {{"var_ht", scenario.channels.var_ht},
          {"var_hr", scenario.channels.var_hr},
          {"var_gt", scenario.channels.var_gt},
          {"var_gr", scenario.channels.var_gr}}},
        {"users", json::array({user(scenario.user1), user(scenario.user2)})}};
    return doc.dump(2);
}

std::string scenario_digest(const ScenarioConfig& scenario) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(scenario_to_json(scenario))));
    return buf;
}

}  // namespace irsout
