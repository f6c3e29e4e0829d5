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

#include <map>
#include <utility>

#include "qsw/graph.hpp"
#include "qsw/matrix.hpp"

namespace qsw {

/// Collection of Lindblad operators of one common dimension.
class LindbladSet {
public:
    LindbladSet() = default;
    explicit LindbladSet(std::vector<ComplexMatrix> ops);

    const std::vector<ComplexMatrix>& ops() const { return ops_; }
    std::size_t size() const { return ops_.size(); }
    bool empty() const { return ops_.empty(); }
    std::size_t dim() const { return ops_.empty() ? 0 : ops_.front().rows(); }

private:
    std::vector<ComplexMatrix> ops_;
};

/// Per-vertex seed matrices supplying the Lindblad amplitudes into each
/// vertex's copy block. Columns of every seed must be pairwise orthogonal.
class SeedFamily {
public:
    static SeedFamily fourier();
    static SeedFamily explicit_per_vertex(std::map<int, ComplexMatrix> seeds);

    /// The d x d seed for a vertex of indegree d; validates size and column
    /// orthogonality.
    ComplexMatrix seed_for(int vertex, std::size_t indegree) const;
    bool is_fourier() const { return explicit_.empty(); }

    static constexpr double kOrthogonalityTol = 1e-10;

private:
    SeedFamily() = default;
    std::map<int, ComplexMatrix> explicit_;
};

/// Adjacency matrix as a Hamiltonian; input must be symmetric.
ComplexMatrix adjacency_hamiltonian(const Digraph& g);

/// Global environment interaction: a single Lindblad operator equal to the
/// adjacency matrix.
LindbladSet global_lindblad(const Digraph& g);

/// Local environment interaction: one operator |dst><src| per arc.
LindbladSet local_lindblads(const Digraph& g);

/// Unnormalized Fourier matrix, F[k][l] = exp(2 pi i k l / d).
ComplexMatrix fourier_seed(std::size_t d);

/// Lindblad operator on the enlarged graph: the entry from a copy of v_j
/// into copy k of v_i equals <k|A_i|rank_i(v_j)> when the arc (v_j, v_i)
/// exists, independent of the source copy index.
ComplexMatrix corrected_lindblad(const EnlargedGraph& eg, const SeedFamily& seeds);

/// The two-operator symmetrization for graphs whose positive indegrees are
/// all 1 or 2 (line segments): seeds [[1,1],[1,-1]] and [[1,1],[-1,1]].
std::pair<ComplexMatrix, ComplexMatrix> symmetrized_pair(const EnlargedGraph& eg);

/// Block-diagonal Hamiltonian rotating within each vertex's copy block:
/// +i on (k, k+1 mod d) and -i on (k, k-1 mod d); for d = 2 the conflict is
/// resolved as the single entry <v^0|H|v^1> = i.
ComplexMatrix rotating_hamiltonian(const EnlargedGraph& eg);

/// 0/1 support indicator of a Lindblad operator, used as the Hamiltonian of
/// the weighted walk on the enlarged graph.
ComplexMatrix enlarged_adjacency_hamiltonian(const ComplexMatrix& l1);

}  // namespace qsw
