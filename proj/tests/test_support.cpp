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

#include "test_support.hpp"

#include <cmath>

namespace qsw::test {

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = cplx{dist(rng), dist(rng)};
    return m;
}

ComplexMatrix random_hermitian(std::size_t n, std::mt19937& rng) {
    const ComplexMatrix m = random_matrix(n, n, rng);
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return h;
}

DensityMatrix random_pure_state(std::size_t n, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<cplx> psi(n);
    double norm2 = 0.0;
    for (auto& a : psi) {
        a = cplx{dist(rng), dist(rng)};
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    ComplexMatrix rho(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rho(i, j) = psi[i] * std::conj(psi[j]) * inv * inv;
    return DensityMatrix(std::move(rho));
}

Digraph random_digraph(int max_n, std::mt19937& rng, double arc_probability) {
    std::uniform_int_distribution<int> size(2, max_n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const int n = size(rng);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && coin(rng) < arc_probability) arcs.emplace_back(u, v);
    return Digraph(n, std::move(arcs));
}

GKSLGenerator random_generator(std::size_t dim, std::size_t lindblad_count, std::mt19937& rng) {
    ComplexMatrix h = random_hermitian(dim, rng);
    std::vector<ComplexMatrix> ls;
    for (std::size_t k = 0; k < lindblad_count; ++k) ls.push_back(random_matrix(dim, dim, rng));
    return GKSLGenerator(dim, std::move(h), std::nullopt, LindbladSet(std::move(ls)));
}

double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix d = a;
    d -= b;
    return d.max_abs();
}

}  // namespace qsw::test
