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

#include <utility>

#include "qsw/matrix.hpp"

// OpenMP-parallel dense/sparse kernels. Each output row is produced by a
// single thread in a fixed summation order, so results are bit-identical
// regardless of thread count. Serial counterparts live in qsw::ref and are
// used as test oracles and benchmark baselines.
namespace qsw::kernels {

// Work sizes below this stay serial; parallel fork-join is not worth it.
inline constexpr std::size_t kParallelThreshold = 1 << 15;

/// out = a * b. out must not alias a or b.
void matmul(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out);

/// y += alpha * x
void add_scaled(ComplexMatrix& y, cplx alpha, const ComplexMatrix& x);

/// out = base + sum_i coeffs[i] * terms[i], single pass.
void lincomb(ComplexMatrix& out, const ComplexMatrix& base,
             std::span<const std::pair<cplx, const ComplexMatrix*>> terms);

void set_zero(ComplexMatrix& m);

/// CSR form of an operator, used to apply sparse Hamiltonians and Lindblad
/// operators to dense density matrices.
struct SparseOperator {
    std::size_t dim = 0;
    std::vector<std::size_t> row_start;  // dim + 1 entries
    std::vector<std::size_t> col;
    std::vector<cplx> val;

    static SparseOperator from_dense(const ComplexMatrix& m);
    std::size_t nnz() const { return val.size(); }
};

/// out += alpha * (s * x)
void add_apply_left(ComplexMatrix& out, cplx alpha, const SparseOperator& s,
                    const ComplexMatrix& x);

/// out += alpha * (x * s)
void add_apply_right(ComplexMatrix& out, cplx alpha, const ComplexMatrix& x,
                     const SparseOperator& s);

}  // namespace qsw::kernels
