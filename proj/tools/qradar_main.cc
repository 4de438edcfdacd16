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

// qradar run <scenario-file> [--format table|structured] [--out PATH]
//            [--roc-out PATH] [--seed N] [--trials N] [--workers N]
//
// Exit codes: 0 success, 1 I/O failure, 2 parse/validation failure,
// 3 numerical-domain failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qradar/errors.h"
#include "qradar/pipeline.h"
#include "qradar/report.h"
#include "qradar/scenario.h"

namespace {

constexpr int kExitIo = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw IoError("cannot write " + path);
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Entangled-photon radar detection simulator"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string format = "table";
    std::string out_path;
    std::string roc_path;
    std::optional<uint64_t> seed;
    std::optional<uint64_t> trials;
    unsigned workers = 1;

    CLI::App *run = app.add_subcommand("run", "Run one scenario and emit a detection report");
    run->add_option("scenario", scenario_path, "Scenario key-value file")->required();
    run->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"table", "structured"}))
        ->capture_default_str();
    run->add_option("--out", out_path, "Write the report here instead of stdout");
    run->add_option("--roc-out", roc_path, "Write ROC points as comma-separated rows");
    run->add_option("--seed", seed, "Override the scenario seed");
    run->add_option("--trials", trials, "Override the scenario trial count");
    run->add_option("--workers", workers, "Monte Carlo worker threads (does not change results)")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        qradar::Scenario scenario = qradar::parse_scenario(read_file(scenario_path));
        if (seed) {
            scenario.seed = *seed;
        }
        if (trials) {
            scenario.trials = *trials;
        }
        qradar::validate_scenario(scenario);

        qradar::DetectionReport report = qradar::run_scenario(scenario, workers);
        auto fmt = format == "structured" ? qradar::ReportFormat::Structured : qradar::ReportFormat::Table;
        write_output(out_path, qradar::emit_report(report, fmt));
        if (!roc_path.empty()) {
            if (!report.roc) {
                std::cerr << "qradar: --roc-out given but the scenario has no roc_thresholds\n";
                return kExitInput;
            }
            write_output(roc_path, qradar::emit_roc_csv(*report.roc));
        }
    } catch (const IoError &e) {
        std::cerr << "qradar: " << e.what() << "\n";
        return kExitIo;
    } catch (const qradar::ParseError &e) {
        std::cerr << "qradar: " << scenario_path << ": " << e.what() << "\n";
        return kExitInput;
    } catch (const qradar::ValidationError &e) {
        std::cerr << "qradar: " << scenario_path << ": invalid " << e.what() << "\n";
        return kExitInput;
    } catch (const qradar::DegenerateInput &e) {
        std::cerr << "qradar: " << e.what() << "\n";
        return kExitInput;
    } catch (const qradar::Error &e) {
        std::cerr << "qradar: numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return 0;
}
