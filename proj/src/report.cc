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

#include "qradar/report.h"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "qradar/errors.h"

namespace qradar {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char *kFormatName = "qradar.detection_report";
constexpr int kFormatVersion = 1;

// Writes each present optional under its name.
struct OptionalWriter {
    Json &obj;
    void operator()(const char *name, const std::optional<double> &v) const {
        if (v) {
            obj[name] = *v;
        }
    }
};

struct OptionalReader {
    const Json &obj;
    void operator()(const char *name, std::optional<double> &v) const {
        if (obj.contains(name)) {
            v = obj.at(name).get<double>();
        }
    }
};

template <typename Visit>
void visit_inputs(LinkBudgetInputs &in, Visit &&visit) {
    visit("power_w", in.power_w);
    visit("frequency_hz", in.frequency_hz);
    visit("temperature_k", in.temperature_k);
    visit("noise_power_w", in.noise_power_w);
    visit("sensitivity_improvement", in.sensitivity_improvement);
    visit("shield_thickness_m", in.shield_thickness_m);
    visit("wavelength_m", in.wavelength_m);
    visit("amplitude_stop", in.amplitude_stop);
    visit("amplitude_pass", in.amplitude_pass);
    visit("noise_ext", in.noise_ext);
    visit("noise_isolated", in.noise_isolated);
}

template <typename Visit>
void visit_outputs(LinkBudgetOutputs &out, Visit &&visit) {
    visit("power_dbm", out.power_dbm);
    visit("photon_energy_j", out.photon_energy_j);
    visit("photon_rate_per_s", out.photon_rate_per_s);
    visit("thermal_occupancy", out.thermal_occupancy);
    visit("noise_excitation", out.noise_excitation);
    visit("noise_power_dbm", out.noise_power_dbm);
    visit("snr", out.snr);
    visit("range_multiplier", out.range_multiplier);
    visit("shielding_effectiveness_db", out.shielding_effectiveness_db);
    visit("isolation_factor", out.isolation_factor);
    visit("stopband_attenuation_db", out.stopband_attenuation_db);
}

Json outcome_to_json(const TrialOutcome &t) {
    return Json{{"trials", t.trials},
                {"seed", t.seed},
                {"decide_h1", t.decide_h1_count},
                {"decide_h0", t.decide_h0_count}};
}

TrialOutcome outcome_from_json(const Json &j, Hypothesis truth) {
    return TrialOutcome{j.at("decide_h1").get<uint64_t>(), j.at("decide_h0").get<uint64_t>(),
                        j.at("trials").get<uint64_t>(), truth, j.at("seed").get<uint64_t>()};
}

Json to_json(const DetectionReport &r) {
    const Scenario &s = r.scenario;
    Json scenario = {
        {"phase_rad", s.phase_rad},
        {"reflectivity", s.reflectivity},
        {"noise_excitation", s.noise_excitation},
    };
    if (s.thermal) {
        scenario["thermal"] = {{"frequency_hz", s.thermal->frequency_hz},
                               {"temperature_k", s.thermal->temperature_k}};
    }
    scenario["env_phase_rad"] = s.env_phase_rad;
    scenario["priors"] = {s.priors.h0, s.priors.h1};
    scenario["trials"] = s.trials;
    scenario["seed"] = s.seed;
    if (s.roc_thresholds) {
        scenario["roc_thresholds"] = *s.roc_thresholds;
    }
    if (s.link_budget) {
        Json lb = Json::object();
        LinkBudgetInputs copy = *s.link_budget;
        visit_inputs(copy, OptionalWriter{lb});
        scenario["link_budget"] = lb;
    }

    Json doc = {
        {"format", kFormatName},
        {"version", kFormatVersion},
        {"scenario", scenario},
        {"effective_phase_rad", r.effective_phase_rad},
        {"noise_excitation", r.noise_excitation},
        {"metrics",
         {{"trace_distance", r.trace_distance}, {"fidelity", r.fidelity}, {"helstrom_error", r.helstrom_error}}},
    };
    if (r.monte_carlo) {
        const MonteCarloSummary &mc = *r.monte_carlo;
        doc["monte_carlo"] = {{"trials", mc.trials},
                              {"seed", mc.seed},
                              {"empirical_error", mc.empirical_error},
                              {"sigma", mc.sigma},
                              {"under_h0", outcome_to_json(mc.under_h0)},
                              {"under_h1", outcome_to_json(mc.under_h1)}};
    }
    if (r.roc) {
        Json points = Json::array();
        for (const RocPoint &p : *r.roc) {
            points.push_back(
                {{"threshold", p.threshold}, {"p_false_alarm", p.p_false_alarm}, {"p_detection", p.p_detection}});
        }
        doc["roc"] = points;
    }
    if (r.link_budget) {
        Json lb = Json::object();
        LinkBudgetOutputs copy = *r.link_budget;
        visit_outputs(copy, OptionalWriter{lb});
        doc["link_budget"] = lb;
    }
    doc["warnings"] = r.warnings;
    return doc;
}

DetectionReport from_json(const Json &doc) {
    if (doc.at("format").get<std::string>() != kFormatName) {
        throw ParseError("not a detection report", 0, "format");
    }
    if (doc.at("version").get<int>() != kFormatVersion) {
        throw ParseError("unsupported report version", 0, "version");
    }
    DetectionReport r;
    const Json &sj = doc.at("scenario");
    Scenario &s = r.scenario;
    s.phase_rad = sj.at("phase_rad").get<double>();
    s.reflectivity = sj.at("reflectivity").get<double>();
    s.noise_excitation = sj.at("noise_excitation").get<double>();
    if (sj.contains("thermal")) {
        s.thermal = ThermalNoise{sj.at("thermal").at("frequency_hz").get<double>(),
                                 sj.at("thermal").at("temperature_k").get<double>()};
    }
    s.env_phase_rad = sj.at("env_phase_rad").get<double>();
    auto priors = sj.at("priors").get<std::vector<double>>();
    if (priors.size() != 2) {
        throw ParseError("priors must have two entries", 0, "scenario.priors");
    }
    s.priors = {priors[0], priors[1]};
    s.trials = sj.at("trials").get<uint64_t>();
    s.seed = sj.at("seed").get<uint64_t>();
    if (sj.contains("roc_thresholds")) {
        s.roc_thresholds = sj.at("roc_thresholds").get<std::vector<double>>();
    }
    if (sj.contains("link_budget")) {
        s.link_budget.emplace();
        visit_inputs(*s.link_budget, OptionalReader{sj.at("link_budget")});
    }

    r.effective_phase_rad = doc.at("effective_phase_rad").get<double>();
    r.noise_excitation = doc.at("noise_excitation").get<double>();
    const Json &m = doc.at("metrics");
    r.trace_distance = m.at("trace_distance").get<double>();
    r.fidelity = m.at("fidelity").get<double>();
    r.helstrom_error = m.at("helstrom_error").get<double>();
    if (doc.contains("monte_carlo")) {
        const Json &mc = doc.at("monte_carlo");
        r.monte_carlo = MonteCarloSummary{mc.at("trials").get<uint64_t>(),
                                          mc.at("seed").get<uint64_t>(),
                                          outcome_from_json(mc.at("under_h0"), Hypothesis::H0),
                                          outcome_from_json(mc.at("under_h1"), Hypothesis::H1),
                                          mc.at("empirical_error").get<double>(),
                                          mc.at("sigma").get<double>()};
    }
    if (doc.contains("roc")) {
        r.roc.emplace();
        for (const Json &p : doc.at("roc")) {
            r.roc->push_back({p.at("threshold").get<double>(), p.at("p_false_alarm").get<double>(),
                              p.at("p_detection").get<double>()});
        }
    }
    if (doc.contains("link_budget")) {
        r.link_budget.emplace();
        visit_outputs(*r.link_budget, OptionalReader{doc.at("link_budget")});
    }
    r.warnings = doc.at("warnings").get<std::vector<std::string>>();
    return r;
}

std::string shortest(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

class Table {
   public:
    void heading(const std::string &title) {
        out_ << title << '\n';
    }
    void row(const std::string &name, double value) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6g", value);
        text_row(name, buf);
    }
    void row(const std::string &name, uint64_t value) {
        text_row(name, std::to_string(value));
    }
    void text_row(const std::string &name, const std::string &value) {
        char buf[256];
        std::snprintf(buf, sizeof(buf), "  %-28s %s\n", name.c_str(), value.c_str());
        out_ << buf;
    }
    std::string str() const {
        return out_.str();
    }

   private:
    std::ostringstream out_;
};

std::string to_table(const DetectionReport &r) {
    Table t;
    const Scenario &s = r.scenario;
    t.heading("scenario");
    t.row("phase_rad", s.phase_rad);
    t.row("env_phase_rad", s.env_phase_rad);
    t.row("effective_phase_rad", r.effective_phase_rad);
    t.row("reflectivity", s.reflectivity);
    if (s.thermal) {
        t.row("frequency_hz", s.thermal->frequency_hz);
        t.row("temperature_k", s.thermal->temperature_k);
    }
    t.row("noise_excitation", r.noise_excitation);
    t.row("prior_h0", s.priors.h0);
    t.row("prior_h1", s.priors.h1);
    t.row("seed", s.seed);
    t.heading("metrics");
    t.row("trace_distance", r.trace_distance);
    t.row("fidelity", r.fidelity);
    t.row("helstrom_error", r.helstrom_error);
    if (r.monte_carlo) {
        const MonteCarloSummary &mc = *r.monte_carlo;
        t.heading("monte_carlo");
        t.row("trials", mc.trials);
        t.row("empirical_error", mc.empirical_error);
        t.row("sigma", mc.sigma);
        t.row("h0_trials", mc.under_h0.trials);
        t.row("h0_false_alarms", mc.under_h0.decide_h1_count);
        t.row("h1_trials", mc.under_h1.trials);
        t.row("h1_misses", mc.under_h1.decide_h0_count);
    }
    if (r.roc) {
        t.heading("roc (threshold, p_false_alarm, p_detection)");
        for (const RocPoint &p : *r.roc) {
            char buf[128];
            std::snprintf(buf, sizeof(buf), "  %-12.6g %-12.6g %.6g", p.threshold, p.p_false_alarm, p.p_detection);
            t.heading(buf);
        }
    }
    if (r.link_budget) {
        t.heading("link_budget");
        LinkBudgetOutputs copy = *r.link_budget;
        visit_outputs(copy, [&t](const char *name, const std::optional<double> &v) {
            if (v) {
                t.row(name, *v);
            }
        });
    }
    if (!r.warnings.empty()) {
        t.heading("warnings");
        for (const std::string &w : r.warnings) {
            t.heading("  - " + w);
        }
    }
    return t.str();
}

}  // namespace

std::string emit_report(const DetectionReport &report, ReportFormat format) {
    if (format == ReportFormat::Table) {
        return to_table(report);
    }
    return to_json(report).dump(2) + "\n";
}

DetectionReport parse_structured_report(std::string_view text) {
    try {
        return from_json(Json::parse(text.begin(), text.end()));
    } catch (const Json::exception &e) {
        throw ParseError(std::string("malformed report: ") + e.what(), 0);
    }
}

std::string emit_roc_csv(std::span<const RocPoint> points) {
    std::string out = "threshold,p_false_alarm,p_detection\n";
    for (const RocPoint &p : points) {
        out += shortest(p.threshold) + "," + shortest(p.p_false_alarm) + "," + shortest(p.p_detection) + "\n";
    }
    return out;
}

}  // namespace qradar
