// Copyright 2026 The qsw authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qsw/experiment.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string model;
    std::string graph;
    std::vector<double> omegas;
    std::string times_spec;  // start:stop:count[:log]
    double single_time = -1.0;
    int initial = -1;
    std::string initial_state;
    std::string out;
    bool snapshots = false;
    std::size_t window = 0;
    std::string integrator;
    double tolerance = 0.0;
};

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config_path, "JSON config file; flags override its fields");
    cmd->add_option("--model", f.model,
                    "global|local|corrected|corrected+rot|symmetrized|weighted");
    cmd->add_option("--graph", f.graph,
                    "builtin (figure1, figure3, line:<n>, segment:<n>) or graph file");
    cmd->add_option("--omega", f.omegas, "interaction weight in [0,1]; repeatable");
    cmd->add_option("--times", f.times_spec, "time grid start:stop:count[:log]");
    cmd->add_option("--t", f.single_time, "single evolution time");
    cmd->add_option("--initial", f.initial, "initial vertex index");
    cmd->add_option("--initial-state", f.initial_state, "initial density matrix JSON file");
    cmd->add_option("--out", f.out, "output directory");
    cmd->add_flag("--snapshots", f.snapshots, "also write density-matrix snapshots");
    cmd->add_option("--window", f.window, "regression window length (default 10)");
    cmd->add_option("--integrator", f.integrator, "auto|expm|ode");
    cmd->add_option("--tol", f.tolerance, "ODE local error tolerance");
}

std::vector<double> parse_times_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ':')) parts.push_back(item);
    if (parts.size() < 3 || parts.size() > 4)
        throw qsw::ConfigError("times", "expected start:stop:count[:log]");
    bool log_spacing = false;
    if (parts.size() == 4) {
        if (parts[3] == "log")
            log_spacing = true;
        else if (parts[3] != "linear")
            throw qsw::ConfigError("times", "spacing must be 'log' or 'linear'");
    }
    try {
        return qsw::time_grid(std::stod(parts[0]), std::stod(parts[1]),
                              static_cast<std::size_t>(std::stoul(parts[2])), log_spacing);
    } catch (const qsw::ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw qsw::ConfigError("times", "malformed grid '" + spec + "'");
    }
}

qsw::ExperimentConfig build_config(const CommonFlags& f) {
    qsw::ExperimentConfig c;
    if (!f.config_path.empty()) c = qsw::ExperimentConfig::from_json_file(f.config_path);
    if (!f.model.empty()) c.model = qsw::parse_model(f.model);
    if (!f.graph.empty()) c.graph = f.graph;
    if (!f.omegas.empty()) c.omegas = f.omegas;
    if (!f.times_spec.empty()) c.times = parse_times_spec(f.times_spec);
    if (f.single_time >= 0.0) c.times = {f.single_time};
    if (f.initial >= 0) c.initial_vertex = f.initial;
    if (!f.initial_state.empty()) c.initial_state_file = f.initial_state;
    if (!f.out.empty()) c.out_dir = f.out;
    if (f.snapshots) c.write_snapshots = true;
    if (f.window > 0) c.window = f.window;
    if (f.tolerance > 0.0) c.ode_tolerance = f.tolerance;
    if (!f.integrator.empty()) {
        if (f.integrator == "auto")
            c.integrator = qsw::IntegratorKind::Auto;
        else if (f.integrator == "expm")
            c.integrator = qsw::IntegratorKind::Expm;
        else if (f.integrator == "ode")
            c.integrator = qsw::IntegratorKind::Ode;
        else
            throw qsw::ConfigError("integrator", "expected auto|expm|ode");
    }
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum stochastic walks on directed graphs"};
    app.require_subcommand(1);

    CommonFlags f;
    CLI::App* simulate = app.add_subcommand("simulate", "evolve and write per-vertex profiles");
    CLI::App* scaling =
        app.add_subcommand("scaling", "second-moment scaling sweep on a line graph");
    CLI::App* moral = app.add_subcommand("moral-check", "detect spontaneous moralization");
    CLI::App* symmetry =
        app.add_subcommand("symmetry", "reflection symmetry of the evolved profile");
    for (CLI::App* cmd : {simulate, scaling, moral, symmetry}) add_common_flags(cmd, f);

    CLI11_PARSE(app, argc, argv);

    try {
        const qsw::ExperimentConfig config = build_config(f);
        if (simulate->parsed()) {
            const auto result = qsw::run_simulate(config);
            std::cout << "wrote " << result.profile_csv.string() << "\n";
            if (result.snapshot_json)
                std::cout << "wrote " << result.snapshot_json->string() << "\n";
        } else if (scaling->parsed()) {
            const auto runs = qsw::run_scaling(config);
            for (const auto& run : runs) {
                std::cout << "omega=" << run.omega;
                if (!run.series.slopes.empty())
                    std::cout << " final-window slope=" << run.series.slopes.back();
                std::cout << " -> " << run.csv.string() << "\n";
            }
        } else if (moral->parsed()) {
            const auto report = qsw::run_moral_check(config);
            std::cout << "moral-check: " << (report.pass ? "pass" : "FAIL");
            if (!report.pass) {
                std::cout << " pairs:";
                for (const auto& p : report.violations)
                    std::cout << " {" << p.a << "," << p.b << "}";
            }
            std::cout << " -> " << report.json.string() << "\n";
            if (!report.pass) return 2;
        } else if (symmetry->parsed()) {
            const auto report = qsw::run_symmetry(config);
            std::cout << "symmetry deviation at t=" << report.time << ": " << report.deviation
                      << " -> " << report.json.string() << "\n";
        }
    } catch (const qsw::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
