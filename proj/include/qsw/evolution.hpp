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

#include <functional>
#include <optional>

#include "qsw/kernels.hpp"
#include "qsw/matrix.hpp"
#include "qsw/operators.hpp"

namespace qsw {

/// GKSL generator: d rho / dt = -i cH [H, rho] - i cR [H_rot, rho]
///   + cD sum_L (L rho L^dag - 1/2 {L^dag L, rho}),
/// with weights (cH, cR, cD) = (1-omega, omega, omega) when omega is set and
/// (1, 1, 1) otherwise.
class GKSLGenerator {
public:
    GKSLGenerator(std::size_t dim,
                  std::optional<ComplexMatrix> hamiltonian,
                  std::optional<ComplexMatrix> rotating,
                  LindbladSet lindblads,
                  std::optional<double> omega = std::nullopt);

    std::size_t dim() const { return dim_; }
    const std::optional<ComplexMatrix>& hamiltonian() const { return hamiltonian_; }
    const std::optional<ComplexMatrix>& rotating() const { return rotating_; }
    const LindbladSet& lindblads() const { return lindblads_; }
    std::optional<double> omega() const { return omega_; }

    double hamiltonian_weight() const { return omega_ ? 1.0 - *omega_ : 1.0; }
    double rotating_weight() const { return omega_ ? *omega_ : 1.0; }
    double dissipator_weight() const { return omega_ ? *omega_ : 1.0; }

    /// out = d rho / dt for an arbitrary matrix rho (not necessarily a
    /// density matrix); scratch must have the generator's dimension.
    void apply(const ComplexMatrix& rho, ComplexMatrix& out, ComplexMatrix& scratch) const;

    /// No-jump drift -i cH H - i cR H_rot - cD/2 sum L^dag L in CSR form.
    const kernels::SparseOperator& drift() const { return merged_left_; }

    static constexpr double kHermitianTol = 1e-10;

private:
    std::size_t dim_;
    std::optional<ComplexMatrix> hamiltonian_;
    std::optional<ComplexMatrix> rotating_;
    LindbladSet lindblads_;
    std::optional<double> omega_;

    // merged sparse forms: out = ml*rho + rho*mr + cD * sum (L rho) L^dag
    kernels::SparseOperator merged_left_;
    kernels::SparseOperator merged_right_;
    std::vector<kernels::SparseOperator> lindblad_csr_;
    std::vector<kernels::SparseOperator> lindblad_adj_csr_;
};

ComplexMatrix rhs(const GKSLGenerator& gen, const DensityMatrix& rho);

/// Upper bound on dim for the superoperator-exponential path.
inline constexpr std::size_t kMaxSuperoperatorDim = 64;

/// The dim^2 x dim^2 matrix G with vec(rhs(rho)) = G vec(rho) under
/// row-stacking vectorization.
ComplexMatrix build_superoperator(const GKSLGenerator& gen);

struct EvolveOptions {
    double abs_tol = 1e-9;
    double initial_step = 1e-3;
    std::size_t max_steps = 50'000'000;
};

DensityMatrix evolve_expm(const GKSLGenerator& gen, const DensityMatrix& rho0, double t);
DensityMatrix evolve_ode(const GKSLGenerator& gen, const DensityMatrix& rho0, double t,
                         const EvolveOptions& opts = {});

using SnapshotCallback = std::function<void(std::size_t index, double t, const DensityMatrix&)>;

/// Propagates through an increasing time grid in one pass, invoking the
/// callback at each grid point.
void evolve_expm_series(const GKSLGenerator& gen, const DensityMatrix& rho0,
                        std::span<const double> times, const SnapshotCallback& cb);
void evolve_ode_series(const GKSLGenerator& gen, const DensityMatrix& rho0,
                       std::span<const double> times, const EvolveOptions& opts,
                       const SnapshotCallback& cb);

/// Transition rate M_{v w}^{v' w'} of the generator, equal to the
/// superoperator entry at (v'*dim + w', v*dim + w).
cplx transition_rate(const GKSLGenerator& gen, std::size_t v, std::size_t w,
                     std::size_t v_to, std::size_t w_to);

struct StationaryOptions {
    double residual_tol = 1e-9;
    double initial_horizon = 1.0;
    double horizon_cap = 1e4;
    EvolveOptions ode;
};

struct StationaryResult {
    DensityMatrix state;
    double time = 0.0;
    double residual = 0.0;
    bool converged = false;
};

/// Long-time evolution from rho0 with doubling horizon until
/// ||rhs||_max < residual_tol or the horizon cap is reached. Non-convergence
/// is reported in the result, not thrown.
StationaryResult stationary_state(const GKSLGenerator& gen, const DensityMatrix& rho0,
                                  const StationaryOptions& opts = {});

}  // namespace qsw
