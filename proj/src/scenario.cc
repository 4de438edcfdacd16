// Copyright 2026 The qradar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qradar/scenario.h"

#include <charconv>
#include <cmath>
#include <set>
#include <string>

#include "qradar/errors.h"

namespace qradar {

namespace {

std::string_view trim(std::string_view s) {
    const char *ws = " \t\r\f\v";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

bool valid_key(std::string_view key) {
    if (key.empty()) {
        return false;
    }
    for (char c : key) {
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) {
            return false;
        }
    }
    return true;
}

class LineParser {
   public:
    LineParser(int line, std::string_view key) : line_(line), key_(key) {
    }

    double number(std::string_view token) const {
        token = trim(token);
        if (token.empty()) {
            fail("missing number");
        }
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            fail("'" + std::string(token) + "' is not a number");
        }
        if (!std::isfinite(v)) {
            fail("'" + std::string(token) + "' is not finite");
        }
        return v;
    }

    uint64_t unsigned_integer(std::string_view token) const {
        token = trim(token);
        uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
            fail("'" + std::string(token) + "' is not a non-negative 64-bit integer");
        }
        return v;
    }

    std::vector<double> list(std::string_view value) const {
        std::vector<double> out;
        while (true) {
            auto comma = value.find(',');
            out.push_back(number(value.substr(0, comma)));
            if (comma == std::string_view::npos) {
                break;
            }
            value.remove_prefix(comma + 1);
        }
        return out;
    }

    [[noreturn]] void fail(const std::string &message) const {
        throw ParseError(std::string(key_) + ": " + message, line_, std::string(key_));
    }

   private:
    int line_;
    std::string_view key_;
};

void require_range(bool ok, const char *field, const std::string &message) {
    if (!ok) {
        throw ValidationError(field, message);
    }
}

void require_positive(const std::optional<double> &v, const char *field) {
    if (v) {
        require_range(*v > 0.0 && std::isfinite(*v), field, "must be positive");
    }
}

}  // namespace

void validate_scenario(Scenario &s) {
    require_range(std::isfinite(s.phase_rad), "phase_rad", "must be finite");
    require_range(std::isfinite(s.env_phase_rad), "env_phase_rad", "must be finite");
    require_range(s.reflectivity >= 0.0 && s.reflectivity <= 1.0, "reflectivity", "must lie in [0, 1]");
    if (s.thermal) {
        require_range(s.thermal->frequency_hz > 0.0 && std::isfinite(s.thermal->frequency_hz), "frequency_hz",
                      "must be positive");
        require_range(s.thermal->temperature_k > 0.0 && std::isfinite(s.thermal->temperature_k), "temperature_k",
                      "must be positive");
        s.noise_excitation = occupancy_to_excitation(thermal_occupancy(s.thermal->frequency_hz, s.thermal->temperature_k));
        require_range(s.noise_excitation < 1.0, "temperature_k",
                      "thermal occupancy so large that the noise excitation rounds to 1");
    }
    require_range(s.noise_excitation >= 0.0 && s.noise_excitation < 1.0, "noise_excitation", "must lie in [0, 1)");
    require_range(std::isfinite(s.priors.h0) && std::isfinite(s.priors.h1) && s.priors.h0 >= 0.0 &&
                      s.priors.h1 >= 0.0 && std::abs(s.priors.h0 + s.priors.h1 - 1.0) <= 1e-12,
                  "priors", "must be two non-negative numbers summing to 1");
    if (s.roc_thresholds) {
        require_range(!s.roc_thresholds->empty(), "roc_thresholds", "must not be empty");
        double prev = 0.0;
        for (double t : *s.roc_thresholds) {
            require_range(t >= 0.0 && std::isfinite(t), "roc_thresholds", "thresholds must be non-negative");
            require_range(t >= prev, "roc_thresholds", "thresholds must be in ascending order");
            prev = t;
        }
    }
    if (s.trials > 0) {
        const uint64_t n0 = static_cast<uint64_t>(std::floor(s.priors.h0 * static_cast<double>(s.trials)));
        require_range(!(s.priors.h0 > 0.0 && n0 == 0) && !(s.priors.h1 > 0.0 && n0 == s.trials), "trials",
                      "too few trials to cover both hypotheses");
    }
    if (s.link_budget) {
        const LinkBudgetInputs &lb = *s.link_budget;
        require_positive(lb.power_w, "link_budget.power_w");
        require_positive(lb.frequency_hz, "link_budget.frequency_hz");
        require_positive(lb.temperature_k, "link_budget.temperature_k");
        require_positive(lb.noise_power_w, "link_budget.noise_power_w");
        require_positive(lb.sensitivity_improvement, "link_budget.sensitivity_improvement");
        require_positive(lb.shield_thickness_m, "link_budget.shield_thickness_m");
        require_positive(lb.wavelength_m, "link_budget.wavelength_m");
        require_positive(lb.amplitude_stop, "link_budget.amplitude_stop");
        require_positive(lb.amplitude_pass, "link_budget.amplitude_pass");
        require_positive(lb.noise_ext, "link_budget.noise_ext");
        require_positive(lb.noise_isolated, "link_budget.noise_isolated");
    }
}

Scenario parse_scenario(std::string_view text) {
    Scenario s;
    std::set<std::string> seen;
    bool in_link_budget = false;
    std::optional<double> noise_excitation, frequency, temperature;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        ++line_no;
        auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

        std::string_view line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line != "[link_budget]") {
                throw ParseError("unknown section '" + std::string(line) + "'", line_no);
            }
            if (in_link_budget) {
                throw ParseError("section [link_budget] repeated", line_no);
            }
            in_link_budget = true;
            s.link_budget.emplace();
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("expected 'key = value'", line_no);
        }
        std::string_view key = trim(line.substr(0, eq));
        std::string_view value = trim(line.substr(eq + 1));
        if (!valid_key(key)) {
            throw ParseError("invalid key '" + std::string(key) + "'", line_no, std::string(key));
        }
        std::string qualified = (in_link_budget ? "link_budget." : "") + std::string(key);
        if (!seen.insert(qualified).second) {
            throw ParseError("key repeated", line_no, qualified);
        }
        LineParser p(line_no, qualified);
        if (value.empty()) {
            p.fail("missing value");
        }

        if (in_link_budget) {
            LinkBudgetInputs &lb = *s.link_budget;
            std::optional<double> *slot = nullptr;
            if (key == "power_w") slot = &lb.power_w;
            else if (key == "frequency_hz") slot = &lb.frequency_hz;
            else if (key == "temperature_k") slot = &lb.temperature_k;
            else if (key == "noise_power_w") slot = &lb.noise_power_w;
            else if (key == "sensitivity_improvement") slot = &lb.sensitivity_improvement;
            else if (key == "shield_thickness_m") slot = &lb.shield_thickness_m;
            else if (key == "wavelength_m") slot = &lb.wavelength_m;
            else if (key == "amplitude_stop") slot = &lb.amplitude_stop;
            else if (key == "amplitude_pass") slot = &lb.amplitude_pass;
            else if (key == "noise_ext") slot = &lb.noise_ext;
            else if (key == "noise_isolated") slot = &lb.noise_isolated;
            else p.fail("unknown link-budget key");
            *slot = p.number(value);
            continue;
        }

        if (key == "phase_rad") {
            s.phase_rad = p.number(value);
        } else if (key == "reflectivity") {
            s.reflectivity = p.number(value);
        } else if (key == "noise_excitation") {
            noise_excitation = p.number(value);
        } else if (key == "frequency_hz") {
            frequency = p.number(value);
        } else if (key == "temperature_k") {
            temperature = p.number(value);
        } else if (key == "env_phase_rad") {
            s.env_phase_rad = p.number(value);
        } else if (key == "priors") {
            std::vector<double> v = p.list(value);
            if (v.size() != 2) {
                p.fail("expected two comma-separated numbers (no target, target)");
            }
            s.priors = {v[0], v[1]};
        } else if (key == "trials") {
            s.trials = p.unsigned_integer(value);
        } else if (key == "seed") {
            s.seed = p.unsigned_integer(value);
        } else if (key == "roc_thresholds") {
            s.roc_thresholds = p.list(value);
        } else {
            p.fail("unknown key");
        }
    }

    if (!seen.contains("phase_rad")) {
        throw ValidationError("phase_rad", "required");
    }
    if (!seen.contains("reflectivity")) {
        throw ValidationError("reflectivity", "required");
    }
    const bool thermal = frequency.has_value() || temperature.has_value();
    if (noise_excitation && thermal) {
        throw ValidationError("noise_excitation", "give either noise_excitation or frequency_hz/temperature_k, not both");
    }
    if (!noise_excitation && !thermal) {
        throw ValidationError("noise_excitation", "required (or give frequency_hz and temperature_k)");
    }
    if (thermal) {
        if (!frequency) {
            throw ValidationError("frequency_hz", "required together with temperature_k");
        }
        if (!temperature) {
            throw ValidationError("temperature_k", "required together with frequency_hz");
        }
        s.thermal = ThermalNoise{*frequency, *temperature};
    } else {
        s.noise_excitation = *noise_excitation;
    }
    validate_scenario(s);
    return s;
}

}  // namespace qradar
