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

#include <random>

#include "qsw/evolution.hpp"
#include "qsw/graph.hpp"
#include "qsw/matrix.hpp"

namespace qsw::test {

inline constexpr std::uint32_t kSeed = 20260809u;

inline std::mt19937 make_rng(std::uint32_t seed = kSeed) { return std::mt19937(seed); }

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng);
ComplexMatrix random_hermitian(std::size_t n, std::mt19937& rng);
DensityMatrix random_pure_state(std::size_t n, std::mt19937& rng);

/// Random digraph without self-loops, n in [2, max_n].
Digraph random_digraph(int max_n, std::mt19937& rng, double arc_probability = 0.35);

/// Random generator with a Hermitian H and `lindblad_count` random Lindblad
/// operators, all scaled to modest norm.
GKSLGenerator random_generator(std::size_t dim, std::size_t lindblad_count, std::mt19937& rng);

double max_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qsw::test
