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

#include <stdexcept>

#include "qsw/linalg.hpp"

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

namespace qsw {

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
    if (m.hermiticity_defect() > 1e-8)
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
    const lapack_int n = static_cast<lapack_int>(m.rows());
    if (n == 0) return {};

    std::vector<cplx> work(m.data(), m.data() + m.element_count());
    std::vector<double> eigenvalues(m.rows());
    const lapack_int info =
        LAPACKE_zheev(LAPACK_ROW_MAJOR, 'N', 'U', n, work.data(), n, eigenvalues.data());
    if (info != 0) throw std::runtime_error("hermitian_eigenvalues: zheev failed");
    return eigenvalues;  // zheev returns ascending order
}

}  // namespace qsw
