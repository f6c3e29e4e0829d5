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

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "qsw/analysis.hpp"
#include "qsw/evolution.hpp"
#include "qsw/graph.hpp"

namespace qsw {

/// Configuration problem; carries the offending field name.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error("config field '" + field + "': " + message),
          field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

enum class ModelKind { Global, Local, Corrected, CorrectedRot, Symmetrized, Weighted };

ModelKind parse_model(const std::string& name);
std::string model_name(ModelKind kind);

enum class IntegratorKind { Auto, Expm, Ode };

struct ExperimentConfig {
    ModelKind model = ModelKind::Global;
    std::string graph = "figure1";  // builtin name or file path
    std::vector<double> omegas;     // empty = no omega weighting
    std::vector<double> times;
    std::optional<int> initial_vertex;
    std::optional<std::string> initial_state_file;
    std::filesystem::path out_dir = ".";
    bool write_snapshots = false;
    std::size_t window = 10;
    IntegratorKind integrator = IntegratorKind::Auto;
    double ode_tolerance = 1e-9;

    static ExperimentConfig from_json_file(const std::filesystem::path& path);
    static ExperimentConfig from_json_text(const std::string& text);
};

/// Linear or logarithmic time grid.
std::vector<double> time_grid(double start, double stop, std::size_t count, bool log_spacing);

/// Builtins: figure1, figure3, line:<n>, segment:<n>; anything else is read
/// as a file (.json or edge-list text).
Digraph load_graph(const std::string& spec);

/// A fully assembled system: graph, optional enlargement, generator, the
/// initial state and the index-to-base-vertex embedding.
struct ModelSystem {
    Digraph graph;
    std::optional<EnlargedGraph> enlarged;
    GKSLGenerator generator;
    DensityMatrix initial;
    std::vector<int> embedding;

    ProbabilityProfile profile(const DensityMatrix& rho) const;
};

ModelSystem assemble_system(const ExperimentConfig& config,
                            std::optional<double> omega = std::nullopt);

struct SimulateResult {
    std::filesystem::path profile_csv;
    std::optional<std::filesystem::path> snapshot_json;
    std::vector<double> times;
    std::vector<ProbabilityProfile> profiles;
};

/// Writes the per-time probability profile CSV (and optional density-matrix
/// snapshots as JSON with complex entries as [re, im]).
SimulateResult run_simulate(const ExperimentConfig& config);

struct ScalingRun {
    double omega = 0.0;
    std::filesystem::path csv;
    ScalingSeries series;
};

/// Second-moment scaling sweep over the configured omegas on a path graph;
/// one CSV (t, mu2, slope) per omega.
std::vector<ScalingRun> run_scaling(const ExperimentConfig& config);

struct MoralReport {
    std::filesystem::path json;
    std::vector<VertexPair> moral_extra_edges;
    std::vector<VertexPair> violations;
    bool pass = false;
};

/// Topology-preservation check: detects moralizing transition rates and
/// compares them with the moral-graph prediction.
MoralReport run_moral_check(const ExperimentConfig& config);

struct SymmetryReport {
    std::filesystem::path json;
    double time = 0.0;
    int center = 0;
    double deviation = 0.0;
};

/// Evolves on a path graph and reports the reflection asymmetry of the
/// final profile about the initial vertex.
SymmetryReport run_symmetry(const ExperimentConfig& config);

/// 17-significant-digit formatting used for all numeric file output, chosen
/// so reruns are byte-identical and values round-trip exactly.
std::string format_g17(double value);

}  // namespace qsw
