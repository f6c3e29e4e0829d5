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

#include "qsw/reference.hpp"

#include <stdexcept>

namespace qsw::ref {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("ref::matmul: inner dimensions differ");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            cplx acc{};
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            out(i, j) = acc;
        }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

ComplexMatrix apply_left(const kernels::SparseOperator& s, const ComplexMatrix& x) {
    ComplexMatrix dense(s.dim, s.dim);
    for (std::size_t i = 0; i < s.dim; ++i)
        for (std::size_t p = s.row_start[i]; p < s.row_start[i + 1]; ++p)
            dense(i, s.col[p]) = s.val[p];
    return matmul(dense, x);
}

ComplexMatrix apply_right(const ComplexMatrix& x, const kernels::SparseOperator& s) {
    ComplexMatrix dense(s.dim, s.dim);
    for (std::size_t i = 0; i < s.dim; ++i)
        for (std::size_t p = s.row_start[i]; p < s.row_start[i + 1]; ++p)
            dense(i, s.col[p]) = s.val[p];
    return matmul(x, dense);
}

ComplexMatrix taylor_expm(const ComplexMatrix& m, std::size_t terms) {
    if (!m.is_square()) throw std::invalid_argument("taylor_expm: matrix must be square");
    ComplexMatrix sum = ComplexMatrix::identity(m.rows());
    ComplexMatrix power = ComplexMatrix::identity(m.rows());
    for (std::size_t k = 1; k <= terms; ++k) {
        power = matmul(power, m);
        power *= cplx{1.0 / static_cast<double>(k)};
        sum += power;
    }
    return sum;
}

}  // namespace qsw::ref
