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

#include "qsw/matrix.hpp"

namespace qsw {

/// Matrix exponential by scaling-and-squaring with Pade approximants
/// (orders 3/5/7/9/13 chosen from the 1-norm).
ComplexMatrix expm(const ComplexMatrix& m);

/// Eigenvalues of a Hermitian matrix, ascending. Input must be Hermitian
/// within 1e-8.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

}  // namespace qsw
