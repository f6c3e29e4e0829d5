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

#include "qsw/kernels.hpp"
#include "qsw/matrix.hpp"

// Serial reference implementations. Deliberately naive: they define the
// expected result for the parallel kernels and serve as independent oracles
// in the tests and as the baseline in the kernel benchmark.
namespace qsw::ref {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix apply_left(const kernels::SparseOperator& s, const ComplexMatrix& x);
ComplexMatrix apply_right(const ComplexMatrix& x, const kernels::SparseOperator& s);

/// Truncated Taylor series for exp(m); accurate to ~1e-13 for ||m|| <= 1.
ComplexMatrix taylor_expm(const ComplexMatrix& m, std::size_t terms = 60);

}  // namespace qsw::ref
