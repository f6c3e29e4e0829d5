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

#include "qsw/kernels.hpp"

#include <cstdint>
#include <stdexcept>

namespace qsw::kernels {

void matmul(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimensions differ");
    if (out.data() == a.data() || out.data() == b.data())
        throw std::invalid_argument("matmul: output aliases an input");
    if (out.rows() != a.rows() || out.cols() != b.cols()) out = ComplexMatrix(a.rows(), b.cols());

    const std::int64_t m = static_cast<std::int64_t>(a.rows());
    const std::size_t k = a.cols();
    const std::size_t n = b.cols();
    const std::size_t work = a.rows() * k * n;

#pragma omp parallel for schedule(static) if (work > kParallelThreshold)
    for (std::int64_t i = 0; i < m; ++i) {
        cplx* out_row = out.data() + static_cast<std::size_t>(i) * n;
        for (std::size_t j = 0; j < n; ++j) out_row[j] = cplx{};
        const cplx* a_row = a.data() + static_cast<std::size_t>(i) * k;
        for (std::size_t p = 0; p < k; ++p) {
            const cplx av = a_row[p];
            if (av == cplx{}) continue;
            const cplx* b_row = b.data() + p * n;
            for (std::size_t j = 0; j < n; ++j) out_row[j] += av * b_row[j];
        }
    }
}

void add_scaled(ComplexMatrix& y, cplx alpha, const ComplexMatrix& x) {
    if (y.rows() != x.rows() || y.cols() != x.cols())
        throw std::invalid_argument("add_scaled: shape mismatch");
    const std::int64_t n = static_cast<std::int64_t>(y.element_count());
    cplx* yd = y.data();
    const cplx* xd = x.data();
#pragma omp parallel for schedule(static) if (n > static_cast<std::int64_t>(kParallelThreshold))
    for (std::int64_t i = 0; i < n; ++i) yd[i] += alpha * xd[i];
}

void lincomb(ComplexMatrix& out, const ComplexMatrix& base,
             std::span<const std::pair<cplx, const ComplexMatrix*>> terms) {
    if (out.rows() != base.rows() || out.cols() != base.cols())
        out = ComplexMatrix(base.rows(), base.cols());
    for (const auto& [c, m] : terms)
        if (m->rows() != base.rows() || m->cols() != base.cols())
            throw std::invalid_argument("lincomb: shape mismatch");
    const std::int64_t n = static_cast<std::int64_t>(base.element_count());
    cplx* od = out.data();
    const cplx* bd = base.data();
#pragma omp parallel for schedule(static) if (n > static_cast<std::int64_t>(kParallelThreshold))
    for (std::int64_t i = 0; i < n; ++i) {
        cplx acc = bd[i];
        for (const auto& [c, m] : terms) acc += c * m->data()[i];
        od[i] = acc;
    }
}

void set_zero(ComplexMatrix& m) {
    const std::int64_t n = static_cast<std::int64_t>(m.element_count());
    cplx* d = m.data();
#pragma omp parallel for schedule(static) if (n > static_cast<std::int64_t>(kParallelThreshold))
    for (std::int64_t i = 0; i < n; ++i) d[i] = cplx{};
}

SparseOperator SparseOperator::from_dense(const ComplexMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("SparseOperator: matrix must be square");
    SparseOperator s;
    s.dim = m.rows();
    s.row_start.resize(s.dim + 1, 0);
    for (std::size_t i = 0; i < s.dim; ++i) {
        for (std::size_t j = 0; j < s.dim; ++j) {
            const cplx v = m(i, j);
            if (v != cplx{}) {
                s.col.push_back(j);
                s.val.push_back(v);
            }
        }
        s.row_start[i + 1] = s.col.size();
    }
    return s;
}

void add_apply_left(ComplexMatrix& out, cplx alpha, const SparseOperator& s,
                    const ComplexMatrix& x) {
    if (x.rows() != s.dim || out.rows() != s.dim || out.cols() != x.cols())
        throw std::invalid_argument("add_apply_left: shape mismatch");
    const std::int64_t dim = static_cast<std::int64_t>(s.dim);
    const std::size_t n = x.cols();
    const std::size_t work = s.nnz() * n;
#pragma omp parallel for schedule(static) if (work > kParallelThreshold)
    for (std::int64_t i = 0; i < dim; ++i) {
        cplx* out_row = out.data() + static_cast<std::size_t>(i) * n;
        for (std::size_t p = s.row_start[i]; p < s.row_start[i + 1]; ++p) {
            const cplx v = alpha * s.val[p];
            const cplx* x_row = x.data() + s.col[p] * n;
            for (std::size_t j = 0; j < n; ++j) out_row[j] += v * x_row[j];
        }
    }
}

void add_apply_right(ComplexMatrix& out, cplx alpha, const ComplexMatrix& x,
                     const SparseOperator& s) {
    if (x.cols() != s.dim || out.cols() != s.dim || out.rows() != x.rows())
        throw std::invalid_argument("add_apply_right: shape mismatch");
    const std::int64_t m = static_cast<std::int64_t>(x.rows());
    const std::size_t n = s.dim;
    const std::size_t work = s.nnz() * x.rows();
#pragma omp parallel for schedule(static) if (work > kParallelThreshold)
    for (std::int64_t i = 0; i < m; ++i) {
        cplx* out_row = out.data() + static_cast<std::size_t>(i) * n;
        const cplx* x_row = x.data() + static_cast<std::size_t>(i) * n;
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t begin = s.row_start[k];
            const std::size_t end = s.row_start[k + 1];
            if (begin == end) continue;
            const cplx v = alpha * x_row[k];
            if (v == cplx{}) continue;
            for (std::size_t p = begin; p < end; ++p) out_row[s.col[p]] += v * s.val[p];
        }
    }
}

}  // namespace qsw::kernels
