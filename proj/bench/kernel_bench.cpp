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

// Compares the OpenMP kernels against the serial reference implementations.

#include <chrono>
#include <cstdio>
#include <random>

#include <omp.h>

#include "qsw/kernels.hpp"
#include "qsw/reference.hpp"

namespace {

using qsw::ComplexMatrix;
using qsw::cplx;

ComplexMatrix random_matrix(std::size_t n, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = cplx{dist(rng), dist(rng)};
    return m;
}

qsw::kernels::SparseOperator random_sparse(std::size_t n, std::size_t nnz_per_row,
                                           std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::uniform_int_distribution<std::size_t> cols(0, n - 1);
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < nnz_per_row; ++k)
            m(i, cols(rng)) = cplx{dist(rng), dist(rng)};
    return qsw::kernels::SparseOperator::from_dense(m);
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        f();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    return best;
}

}  // namespace

int main() {
    std::mt19937 rng(12345);
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s %10s %10s %8s %10s\n", "kernel", "serial[ms]", "openmp[ms]", "speedup",
                "max diff");

    for (std::size_t n : {64u, 128u, 256u, 512u}) {
        const ComplexMatrix a = random_matrix(n, rng);
        const ComplexMatrix b = random_matrix(n, rng);
        ComplexMatrix out(n, n);
        ComplexMatrix expected;
        const double t_ref = time_best_of(3, [&] { expected = qsw::ref::matmul(a, b); });
        const double t_par = time_best_of(3, [&] { qsw::kernels::matmul(a, b, out); });
        const double diff = (out - expected).max_abs();
        std::printf("matmul %4zu x %-14zu %10.3f %10.3f %8.2f %10.2e\n", n, n, t_ref * 1e3,
                    t_par * 1e3, t_ref / t_par, diff);
    }

    for (std::size_t n : {256u, 512u, 1024u}) {
        const auto s = random_sparse(n, 4, rng);
        const ComplexMatrix x = random_matrix(n, rng);
        ComplexMatrix out(n, n);
        ComplexMatrix expected;
        const double t_ref = time_best_of(3, [&] { expected = qsw::ref::apply_left(s, x); });
        const double t_par = time_best_of(3, [&] {
            qsw::kernels::set_zero(out);
            qsw::kernels::add_apply_left(out, 1.0, s, x);
        });
        const double diff = (out - expected).max_abs();
        std::printf("sparse apply_left %-11zu %10.3f %10.3f %8.2f %10.2e\n", n, t_ref * 1e3,
                    t_par * 1e3, t_ref / t_par, diff);
    }

    for (std::size_t n : {256u, 512u, 1024u}) {
        const auto s = random_sparse(n, 4, rng);
        const ComplexMatrix x = random_matrix(n, rng);
        ComplexMatrix out(n, n);
        ComplexMatrix expected;
        const double t_ref = time_best_of(3, [&] { expected = qsw::ref::apply_right(x, s); });
        const double t_par = time_best_of(3, [&] {
            qsw::kernels::set_zero(out);
            qsw::kernels::add_apply_right(out, 1.0, x, s);
        });
        const double diff = (out - expected).max_abs();
        std::printf("sparse apply_right %-10zu %10.3f %10.3f %8.2f %10.2e\n", n, t_ref * 1e3,
                    t_par * 1e3, t_ref / t_par, diff);
    }
    return 0;
}
