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

#include "qsw/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsw {

LindbladSet::LindbladSet(std::vector<ComplexMatrix> ops) : ops_(std::move(ops)) {
    for (const auto& op : ops_) {
        if (!op.is_square() || op.rows() != ops_.front().rows())
            throw std::invalid_argument("LindbladSet: operators must share one square dimension");
    }
}

SeedFamily SeedFamily::fourier() { return SeedFamily{}; }

SeedFamily SeedFamily::explicit_per_vertex(std::map<int, ComplexMatrix> seeds) {
    if (seeds.empty())
        throw std::invalid_argument("SeedFamily: explicit family needs at least one seed");
    SeedFamily f;
    f.explicit_ = std::move(seeds);
    return f;
}

ComplexMatrix SeedFamily::seed_for(int vertex, std::size_t indegree) const {
    ComplexMatrix seed;
    if (explicit_.empty()) {
        seed = fourier_seed(indegree);
    } else {
        const auto it = explicit_.find(vertex);
        if (it == explicit_.end())
            throw std::invalid_argument("SeedFamily: no seed for vertex " + std::to_string(vertex));
        seed = it->second;
        if (!seed.is_square() || seed.rows() != indegree)
            throw std::invalid_argument("SeedFamily: seed size does not match indegree of vertex " +
                                        std::to_string(vertex));
    }
    // columns must form an orthogonal basis
    for (std::size_t p = 0; p < indegree; ++p) {
        for (std::size_t q = p + 1; q < indegree; ++q) {
            cplx dot{};
            for (std::size_t k = 0; k < indegree; ++k) dot += std::conj(seed(k, p)) * seed(k, q);
            if (std::abs(dot) > kOrthogonalityTol)
                throw std::invalid_argument("SeedFamily: seed columns are not orthogonal");
        }
        double norm2 = 0.0;
        for (std::size_t k = 0; k < indegree; ++k) norm2 += std::norm(seed(k, p));
        if (norm2 == 0.0) throw std::invalid_argument("SeedFamily: seed has a zero column");
    }
    return seed;
}

ComplexMatrix adjacency_hamiltonian(const Digraph& g) {
    if (!g.is_symmetric())
        throw std::invalid_argument("adjacency_hamiltonian: graph must be symmetric");
    const std::size_t n = g.vertex_count();
    ComplexMatrix h(n, n);
    for (const auto& [src, dst] : g.arcs()) h(dst, src) = 1.0;
    return h;
}

LindbladSet global_lindblad(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    ComplexMatrix l(n, n);
    for (const auto& [src, dst] : g.arcs()) l(dst, src) = 1.0;
    return LindbladSet({std::move(l)});
}

LindbladSet local_lindblads(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<ComplexMatrix> ops;
    ops.reserve(g.arcs().size());
    for (const auto& [src, dst] : g.arcs()) {
        ComplexMatrix l(n, n);
        l(dst, src) = 1.0;
        ops.push_back(std::move(l));
    }
    return LindbladSet(std::move(ops));
}

ComplexMatrix fourier_seed(std::size_t d) {
    if (d == 0) throw std::invalid_argument("fourier_seed: dimension must be positive");
    ComplexMatrix f(d, d);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
            f(k, l) = std::polar(1.0, step * static_cast<double>(k * l));
    return f;
}

ComplexMatrix corrected_lindblad(const EnlargedGraph& eg, const SeedFamily& seeds) {
    const std::size_t dim = eg.total_dim();
    ComplexMatrix l(dim, dim);
    const Digraph& g = eg.base();
    for (int vi = 0; vi < g.vertex_count(); ++vi) {
        const auto& par = eg.parents(vi);
        if (par.empty()) continue;
        const ComplexMatrix seed = seeds.seed_for(vi, par.size());
        const std::size_t ti = eg.block_start(vi);
        for (std::size_t r = 0; r < par.size(); ++r) {
            const int vj = par[r];
            const std::size_t sj = eg.block_start(vj);
            const std::size_t source_copies = eg.block_size(vj);
            // same amplitude out of every copy of the source vertex
            for (std::size_t k = 0; k < par.size(); ++k)
                for (std::size_t cl = 0; cl < source_copies; ++cl)
                    l(ti + k, sj + cl) = seed(k, r);
        }
    }
    return l;
}

std::pair<ComplexMatrix, ComplexMatrix> symmetrized_pair(const EnlargedGraph& eg) {
    const Digraph& g = eg.base();
    std::map<int, ComplexMatrix> s1, s2;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const std::size_t d = eg.parents(v).size();
        if (d == 0) continue;
        if (d == 1) {
            s1[v] = ComplexMatrix::from_rows({{1.0}});
            s2[v] = ComplexMatrix::from_rows({{1.0}});
        } else if (d == 2) {
            s1[v] = ComplexMatrix::from_rows({{1.0, 1.0}, {1.0, -1.0}});
            s2[v] = ComplexMatrix::from_rows({{1.0, 1.0}, {-1.0, 1.0}});
        } else {
            throw std::invalid_argument(
                "symmetrized_pair: unsupported graph, indegree above 2 at vertex " +
                std::to_string(v));
        }
    }
    if (s1.empty())
        return {ComplexMatrix(eg.total_dim(), eg.total_dim()),
                ComplexMatrix(eg.total_dim(), eg.total_dim())};
    return {corrected_lindblad(eg, SeedFamily::explicit_per_vertex(s1)),
            corrected_lindblad(eg, SeedFamily::explicit_per_vertex(s2))};
}

ComplexMatrix rotating_hamiltonian(const EnlargedGraph& eg) {
    const std::size_t dim = eg.total_dim();
    ComplexMatrix h(dim, dim);
    const cplx iu{0.0, 1.0};
    for (int v = 0; v < eg.base().vertex_count(); ++v) {
        const std::size_t d = eg.block_size(v);
        const std::size_t b = eg.block_start(v);
        if (d < 2) continue;
        if (d == 2) {
            // k+1 and k-1 coincide mod 2; the +1 direction wins
            h(b, b + 1) = iu;
            h(b + 1, b) = -iu;
            continue;
        }
        for (std::size_t k = 0; k < d; ++k) {
            h(b + k, b + (k + 1) % d) = iu;
            h(b + k, b + (k + d - 1) % d) = -iu;
        }
    }
    return h;
}

ComplexMatrix enlarged_adjacency_hamiltonian(const ComplexMatrix& l1) {
    ComplexMatrix h(l1.rows(), l1.cols());
    for (std::size_t i = 0; i < l1.rows(); ++i)
        for (std::size_t j = 0; j < l1.cols(); ++j)
            if (l1(i, j) != cplx{}) h(i, j) = 1.0;
    return h;
}

}  // namespace qsw
