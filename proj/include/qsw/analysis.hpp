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

#include "qsw/evolution.hpp"
#include "qsw/graph.hpp"
#include "qsw/matrix.hpp"

namespace qsw {

/// Per-vertex measurement probabilities; validated non-negative (within
/// tolerance) and summing to one.
struct ProbabilityProfile {
    static constexpr double kNegativeTol = 1e-9;
    static constexpr double kSumTol = 1e-8;
    static constexpr double kImagTol = 1e-10;

    std::vector<double> p;

    static ProbabilityProfile validated(std::vector<double> values);
};

/// p(v) = sum of diagonal entries over v's copy block.
ProbabilityProfile vertex_probabilities(const EnlargedGraph& eg, const DensityMatrix& rho);
/// Identity embedding: p(v) = rho[v][v].
ProbabilityProfile diagonal_probabilities(const DensityMatrix& rho);

/// sum_v p(v) * position(v)^2
double second_moment(std::span<const double> positions, const ProbabilityProfile& profile);

/// Log-log OLS slopes over every window of `window` consecutive points;
/// result size is times.size() - window + 1.
std::vector<double> scaling_slopes(std::span<const double> times,
                                   std::span<const double> mu2, std::size_t window);

/// Second-moment series with windowed log-log regression slopes.
struct ScalingSeries {
    std::vector<double> times;
    std::vector<double> mu2;
    std::size_t window = 10;
    std::vector<double> slopes;

    void compute_slopes() { slopes = scaling_slopes(times, mu2, window); }
};

/// Max asymmetry |p(center+k) - p(center-k)| over k with both indices in
/// range; the profile must live on a path graph.
double symmetry_deviation(const ProbabilityProfile& profile, std::size_t center);

struct VertexPair {
    int a = 0;
    int b = 0;  // a < b
    bool operator==(const VertexPair&) const = default;
    auto operator<=>(const VertexPair&) const = default;
};

inline constexpr double kMoralizationThreshold = 1e-12;

/// Scans transition rates M_{x w}^{y w} for all state pairs (x, y) whose
/// base representatives are distinct and non-adjacent; returns the base
/// pairs with any rate above the threshold. `embedding` maps each generator
/// index to its base vertex (identity for walks on the base graph).
std::vector<VertexPair> detect_moralization(const GKSLGenerator& gen, const Digraph& g,
                                            std::span<const int> embedding);

/// Identity embedding helper.
std::vector<int> identity_embedding(std::size_t dim);
/// Copy-block embedding of an enlarged graph.
std::vector<int> block_embedding(const EnlargedGraph& eg);

}  // namespace qsw
