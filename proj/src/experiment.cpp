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

#include "qsw/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qsw/operators.hpp"

namespace qsw {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    if (!path.parent_path().empty()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out << content;
}

json density_to_json(const DensityMatrix& rho) {
    json rows = json::array();
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < rho.dim(); ++j) {
            const cplx v = rho.matrix()(i, j);
            row.push_back({v.real(), v.imag()});
        }
        rows.push_back(std::move(row));
    }
    return json{{"dim", rho.dim()}, {"rho", std::move(rows)}};
}

DensityMatrix density_from_json(const json& j) {
    if (!j.contains("dim") || !j.contains("rho"))
        throw ConfigError("initial", "state file needs 'dim' and 'rho' fields");
    const std::size_t dim = j["dim"].get<std::size_t>();
    ComplexMatrix m(dim, dim);
    const auto& rows = j["rho"];
    if (rows.size() != dim) throw ConfigError("initial", "state file row count mismatch");
    for (std::size_t i = 0; i < dim; ++i) {
        if (rows[i].size() != dim) throw ConfigError("initial", "state file column count mismatch");
        for (std::size_t jx = 0; jx < dim; ++jx) {
            const auto& e = rows[i][jx];
            if (!e.is_array() || e.size() != 2)
                throw ConfigError("initial", "state entries must be [re, im] pairs");
            m(i, jx) = cplx{e[0].get<double>(), e[1].get<double>()};
        }
    }
    return DensityMatrix(std::move(m));
}

}  // namespace

std::string format_g17(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

ModelKind parse_model(const std::string& name) {
    if (name == "global") return ModelKind::Global;
    if (name == "local") return ModelKind::Local;
    if (name == "corrected") return ModelKind::Corrected;
    if (name == "corrected+rot") return ModelKind::CorrectedRot;
    if (name == "symmetrized") return ModelKind::Symmetrized;
    if (name == "weighted") return ModelKind::Weighted;
    throw ConfigError("model", "unknown model '" + name +
                                   "' (expected global|local|corrected|corrected+rot|"
                                   "symmetrized|weighted)");
}

std::string model_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::Global: return "global";
        case ModelKind::Local: return "local";
        case ModelKind::Corrected: return "corrected";
        case ModelKind::CorrectedRot: return "corrected+rot";
        case ModelKind::Symmetrized: return "symmetrized";
        case ModelKind::Weighted: return "weighted";
    }
    return "?";
}

std::vector<double> time_grid(double start, double stop, std::size_t count, bool log_spacing) {
    if (count == 0) throw ConfigError("times", "grid needs at least one point");
    if (stop < start) throw ConfigError("times", "stop must be >= start");
    if (log_spacing && start <= 0.0) throw ConfigError("times", "log spacing needs start > 0");
    std::vector<double> t(count);
    if (count == 1) {
        t[0] = start;
        return t;
    }
    if (log_spacing) {
        const double la = std::log(start);
        const double lb = std::log(stop);
        for (std::size_t i = 0; i < count; ++i)
            t[i] = std::exp(la + (lb - la) * static_cast<double>(i) /
                                     static_cast<double>(count - 1));
        t.back() = stop;
    } else {
        for (std::size_t i = 0; i < count; ++i)
            t[i] = start + (stop - start) * static_cast<double>(i) /
                               static_cast<double>(count - 1);
        t.back() = stop;
    }
    return t;
}

Digraph load_graph(const std::string& spec) {
    if (spec == "figure1") return Digraph(3, {{0, 2}, {1, 2}});
    if (spec == "figure3")
        return Digraph(4, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}, {0, 3}});
    for (const char* prefix : {"line:", "segment:"}) {
        if (spec.rfind(prefix, 0) == 0) {
            const std::string num = spec.substr(std::string(prefix).size());
            int n = 0;
            try {
                n = std::stoi(num);
            } catch (const std::exception&) {
                throw ConfigError("graph", "bad vertex count in '" + spec + "'");
            }
            if (n < 1) throw ConfigError("graph", "line needs at least one vertex");
            return Digraph::path(n);
        }
    }
    const std::filesystem::path path(spec);
    if (!std::filesystem::exists(path))
        throw ConfigError("graph", "no builtin or file named '" + spec + "'");
    const std::string text = read_file(path);
    if (path.extension() == ".json") return Digraph::parse_json(text);
    return Digraph::parse_edge_list(text);
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("(root)", std::string("invalid JSON: ") + e.what());
    }
    ExperimentConfig c;
    if (j.contains("model")) c.model = parse_model(j["model"].get<std::string>());
    if (j.contains("graph")) c.graph = j["graph"].get<std::string>();
    if (j.contains("omega")) {
        if (j["omega"].is_array())
            c.omegas = j["omega"].get<std::vector<double>>();
        else
            c.omegas = {j["omega"].get<double>()};
    }
    if (j.contains("omegas")) c.omegas = j["omegas"].get<std::vector<double>>();
    if (j.contains("times")) {
        const auto& t = j["times"];
        if (t.is_array()) {
            c.times = t.get<std::vector<double>>();
        } else if (t.is_object()) {
            const bool log_spacing = t.value("spacing", "linear") == std::string("log");
            c.times = time_grid(t.value("start", 0.0), t.value("stop", 1.0),
                                t.value("count", std::size_t{1}), log_spacing);
        } else {
            throw ConfigError("times", "must be a list or {start, stop, count, spacing}");
        }
    }
    if (j.contains("initial")) {
        const auto& ini = j["initial"];
        if (ini.is_number_integer())
            c.initial_vertex = ini.get<int>();
        else if (ini.is_object() && ini.contains("state_file"))
            c.initial_state_file = ini["state_file"].get<std::string>();
        else
            throw ConfigError("initial", "must be a vertex index or {state_file: path}");
    }
    if (j.contains("out")) c.out_dir = j["out"].get<std::string>();
    if (j.contains("snapshots")) c.write_snapshots = j["snapshots"].get<bool>();
    if (j.contains("window")) c.window = j["window"].get<std::size_t>();
    if (j.contains("tolerance")) c.ode_tolerance = j["tolerance"].get<double>();
    if (j.contains("integrator")) {
        const std::string v = j["integrator"].get<std::string>();
        if (v == "auto")
            c.integrator = IntegratorKind::Auto;
        else if (v == "expm")
            c.integrator = IntegratorKind::Expm;
        else if (v == "ode")
            c.integrator = IntegratorKind::Ode;
        else
            throw ConfigError("integrator", "expected auto|expm|ode");
    }
    return c;
}

ExperimentConfig ExperimentConfig::from_json_file(const std::filesystem::path& path) {
    return from_json_text(read_file(path));
}

ProbabilityProfile ModelSystem::profile(const DensityMatrix& rho) const {
    if (enlarged) return vertex_probabilities(*enlarged, rho);
    return diagonal_probabilities(rho);
}

ModelSystem assemble_system(const ExperimentConfig& config, std::optional<double> omega) {
    Digraph g = load_graph(config.graph);
    const bool enlarged_model = config.model != ModelKind::Global && config.model != ModelKind::Local;

    std::optional<EnlargedGraph> eg;
    if (enlarged_model) eg.emplace(g);
    const std::size_t dim = enlarged_model ? eg->total_dim()
                                           : static_cast<std::size_t>(g.vertex_count());

    std::optional<ComplexMatrix> hamiltonian;
    std::optional<ComplexMatrix> rotating;
    LindbladSet lindblads;
    switch (config.model) {
        case ModelKind::Global:
            // H = adjacency only when Hermitian, i.e. on symmetric graphs
            if (g.is_symmetric()) hamiltonian = adjacency_hamiltonian(g);
            lindblads = global_lindblad(g);
            break;
        case ModelKind::Local:
            if (g.is_symmetric()) hamiltonian = adjacency_hamiltonian(g);
            lindblads = local_lindblads(g);
            break;
        case ModelKind::Corrected:
            lindblads = LindbladSet({corrected_lindblad(*eg, SeedFamily::fourier())});
            break;
        case ModelKind::CorrectedRot:
            lindblads = LindbladSet({corrected_lindblad(*eg, SeedFamily::fourier())});
            rotating = rotating_hamiltonian(*eg);
            break;
        case ModelKind::Symmetrized: {
            auto [l1, l2] = symmetrized_pair(*eg);
            lindblads = LindbladSet({std::move(l1), std::move(l2)});
            rotating = rotating_hamiltonian(*eg);
            break;
        }
        case ModelKind::Weighted: {
            auto [l1, l2] = symmetrized_pair(*eg);
            hamiltonian = enlarged_adjacency_hamiltonian(l1);
            lindblads = LindbladSet({std::move(l1), std::move(l2)});
            rotating = rotating_hamiltonian(*eg);
            if (!omega) throw ConfigError("omega", "the weighted model needs omega");
            break;
        }
    }

    // initial state
    DensityMatrix initial = [&]() -> DensityMatrix {
        if (config.initial_state_file) {
            const auto state = density_from_json(json::parse(read_file(*config.initial_state_file)));
            if (state.dim() != dim)
                throw ConfigError("initial", "state file dimension does not match the system");
            return state;
        }
        const int v = config.initial_vertex.value_or(0);
        if (v < 0 || v >= g.vertex_count())
            throw ConfigError("initial", "vertex index out of range");
        if (!enlarged_model) return DensityMatrix::basis_state(dim, static_cast<std::size_t>(v));
        // evenly mixed over the vertex's copy block
        ComplexMatrix m(dim, dim);
        const std::size_t b = eg->block_start(v);
        const std::size_t size = eg->block_size(v);
        for (std::size_t k = 0; k < size; ++k) m(b + k, b + k) = 1.0 / static_cast<double>(size);
        return DensityMatrix(std::move(m));
    }();

    std::vector<int> embedding =
        enlarged_model ? block_embedding(*eg) : identity_embedding(dim);

    GKSLGenerator generator(dim, std::move(hamiltonian), std::move(rotating),
                            std::move(lindblads), omega);
    return ModelSystem{std::move(g), std::move(eg), std::move(generator), std::move(initial),
                       std::move(embedding)};
}

namespace {

void evolve_series_dispatch(const ModelSystem& sys, const ExperimentConfig& config,
                            std::span<const double> times, const SnapshotCallback& cb) {
    IntegratorKind kind = config.integrator;
    if (kind == IntegratorKind::Auto)
        kind = sys.generator.dim() <= kMaxSuperoperatorDim ? IntegratorKind::Expm
                                                           : IntegratorKind::Ode;
    if (kind == IntegratorKind::Expm) {
        evolve_expm_series(sys.generator, sys.initial, times, cb);
    } else {
        EvolveOptions opts;
        opts.abs_tol = config.ode_tolerance;
        evolve_ode_series(sys.generator, sys.initial, times, opts, cb);
    }
}

std::optional<double> single_omega(const ExperimentConfig& config) {
    if (config.omegas.empty()) return std::nullopt;
    if (config.omegas.size() > 1)
        throw ConfigError("omega", "this command takes at most one omega");
    return config.omegas.front();
}

}  // namespace

SimulateResult run_simulate(const ExperimentConfig& config) {
    if (config.times.empty()) throw ConfigError("times", "simulate needs at least one time");
    const ModelSystem sys = assemble_system(config, single_omega(config));
    const int n = sys.graph.vertex_count();

    SimulateResult result;
    result.times.assign(config.times.begin(), config.times.end());

    std::ostringstream csv;
    csv << "t";
    for (int v = 0; v < n; ++v) csv << ",v" << v;
    csv << "\n";

    json snapshots = json::array();
    evolve_series_dispatch(sys, config, config.times,
                           [&](std::size_t, double t, const DensityMatrix& rho) {
                               const ProbabilityProfile prof = sys.profile(rho);
                               csv << format_g17(t);
                               for (double p : prof.p) csv << "," << format_g17(p);
                               csv << "\n";
                               result.profiles.push_back(prof);
                               if (config.write_snapshots) {
                                   json s = density_to_json(rho);
                                   s["t"] = t;
                                   snapshots.push_back(std::move(s));
                               }
                           });

    result.profile_csv = config.out_dir / "profiles.csv";
    write_file(result.profile_csv, csv.str());
    if (config.write_snapshots) {
        result.snapshot_json = config.out_dir / "snapshots.json";
        write_file(*result.snapshot_json, json{{"states", std::move(snapshots)}}.dump(2) + "\n");
    }
    return result;
}

std::vector<ScalingRun> run_scaling(const ExperimentConfig& config) {
    if (config.times.size() < config.window)
        throw ConfigError("times", "scaling needs at least `window` time points");
    if (config.omegas.empty()) throw ConfigError("omega", "scaling needs an omega list");
    Digraph g = load_graph(config.graph);
    if (!g.is_path()) throw ConfigError("graph", "scaling runs on a line graph (path)");
    const int n = g.vertex_count();
    const int center = config.initial_vertex.value_or(n / 2);
    if (center < 0 || center >= n) throw ConfigError("initial", "vertex index out of range");

    std::vector<double> positions(n);
    for (int v = 0; v < n; ++v) positions[v] = static_cast<double>(v - center);

    std::vector<ScalingRun> runs;
    for (double omega : config.omegas) {
        ExperimentConfig local = config;
        local.initial_vertex = center;
        const ModelSystem sys = assemble_system(local, omega);

        ScalingRun run;
        run.omega = omega;
        run.series.times.assign(config.times.begin(), config.times.end());
        run.series.window = config.window;
        run.series.mu2.resize(config.times.size());
        evolve_series_dispatch(sys, config, config.times,
                               [&](std::size_t idx, double, const DensityMatrix& rho) {
                                   run.series.mu2[idx] =
                                       second_moment(positions, sys.profile(rho));
                               });
        run.series.compute_slopes();

        std::ostringstream csv;
        csv << "t,mu2,slope\n";
        for (std::size_t i = 0; i < run.series.times.size(); ++i) {
            csv << format_g17(run.series.times[i]) << "," << format_g17(run.series.mu2[i]) << ",";
            // slope of the window ending at this row
            if (i + 1 >= config.window)
                csv << format_g17(run.series.slopes[i + 1 - config.window]);
            csv << "\n";
        }
        std::ostringstream name;
        name << "scaling_omega_" << format_g17(omega) << ".csv";
        run.csv = config.out_dir / name.str();
        write_file(run.csv, csv.str());
        runs.push_back(std::move(run));
    }
    return runs;
}

MoralReport run_moral_check(const ExperimentConfig& config) {
    const ModelSystem sys = assemble_system(config, single_omega(config));

    MoralReport report;
    report.violations = detect_moralization(sys.generator, sys.graph, sys.embedding);
    const Digraph moral = moral_graph(sys.graph);
    for (const auto& [src, dst] : moral.arcs()) {
        if (src < dst && sys.graph.non_adjacent(src, dst))
            report.moral_extra_edges.push_back({src, dst});
    }
    report.pass = report.violations.empty();

    json j;
    j["graph"] = json::parse(sys.graph.to_json());
    j["model"] = model_name(config.model);
    auto pairs_to_json = [](const std::vector<VertexPair>& pairs) {
        json arr = json::array();
        for (const auto& p : pairs) arr.push_back({p.a, p.b});
        return arr;
    };
    j["moral_extra_edges"] = pairs_to_json(report.moral_extra_edges);
    j["violating_pairs"] = pairs_to_json(report.violations);
    j["pass"] = report.pass;
    report.json = config.out_dir / "moral_report.json";
    write_file(report.json, j.dump(2) + "\n");
    return report;
}

SymmetryReport run_symmetry(const ExperimentConfig& config) {
    if (config.times.empty()) throw ConfigError("times", "symmetry needs a time");
    Digraph g = load_graph(config.graph);
    if (!g.is_path()) throw ConfigError("graph", "symmetry runs on a line graph (path)");
    const int n = g.vertex_count();
    const int center = config.initial_vertex.value_or(n / 2);

    ExperimentConfig local = config;
    local.initial_vertex = center;
    const ModelSystem sys = assemble_system(local, single_omega(config));

    SymmetryReport report;
    report.time = config.times.back();
    report.center = center;

    std::optional<ProbabilityProfile> prof;
    evolve_series_dispatch(sys, config, config.times,
                           [&](std::size_t, double, const DensityMatrix& rho) {
                               prof = sys.profile(rho);
                           });
    report.deviation = symmetry_deviation(*prof, static_cast<std::size_t>(center));

    json j;
    j["model"] = model_name(config.model);
    j["t"] = report.time;
    j["center"] = report.center;
    j["deviation"] = report.deviation;
    json parr = json::array();
    for (double p : prof->p) parr.push_back(p);
    j["profile"] = std::move(parr);
    report.json = config.out_dir / "symmetry.json";
    write_file(report.json, j.dump(2) + "\n");
    return report;
}

}  // namespace qsw
