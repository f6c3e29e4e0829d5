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

#include "qsw/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "qsw/linalg.hpp"

namespace qsw {

namespace {

constexpr cplx kImag{0.0, 1.0};

ComplexMatrix sum_ldag_l(const std::vector<kernels::SparseOperator>& csr, std::size_t dim) {
    // K = sum_L L^dag L accumulated row by row: K[a][b] += conj(L[i][a]) L[i][b]
    ComplexMatrix k(dim, dim);
    for (const auto& s : csr) {
        for (std::size_t i = 0; i < s.dim; ++i) {
            for (std::size_t p = s.row_start[i]; p < s.row_start[i + 1]; ++p) {
                const cplx left = std::conj(s.val[p]);
                for (std::size_t q = s.row_start[i]; q < s.row_start[i + 1]; ++q)
                    k(s.col[p], s.col[q]) += left * s.val[q];
            }
        }
    }
    return k;
}

DensityMatrix validate_evolved(ComplexMatrix m, double t) {
    const auto c = DensityMatrix::check(m);
    if (!c.ok()) {
        std::ostringstream os;
        os << "evolution produced an invalid density matrix at t=" << t << " (" << c.describe()
           << ")";
        throw std::runtime_error(os.str());
    }
    return DensityMatrix(std::move(m));
}

void check_times(std::span<const double> times) {
    double prev = 0.0;
    for (double t : times) {
        if (!std::isfinite(t) || t < 0.0)
            throw std::invalid_argument("evolve: times must be finite and non-negative");
        if (t < prev) throw std::invalid_argument("evolve: times must be non-decreasing");
        prev = t;
    }
}

}  // namespace

GKSLGenerator::GKSLGenerator(std::size_t dim, std::optional<ComplexMatrix> hamiltonian,
                             std::optional<ComplexMatrix> rotating, LindbladSet lindblads,
                             std::optional<double> omega)
    : dim_(dim),
      hamiltonian_(std::move(hamiltonian)),
      rotating_(std::move(rotating)),
      lindblads_(std::move(lindblads)),
      omega_(omega) {
    if (dim_ == 0) throw std::invalid_argument("GKSLGenerator: dimension must be positive");
    for (const auto* h : {&hamiltonian_, &rotating_}) {
        if (!h->has_value()) continue;
        if (!(*h)->is_square() || (*h)->rows() != dim_)
            throw std::invalid_argument("GKSLGenerator: Hamiltonian dimension mismatch");
        if ((*h)->hermiticity_defect() > kHermitianTol)
            throw std::invalid_argument("GKSLGenerator: Hamiltonian is not Hermitian");
    }
    if (!lindblads_.empty() && lindblads_.dim() != dim_)
        throw std::invalid_argument("GKSLGenerator: Lindblad dimension mismatch");
    if (omega_ && (*omega_ < 0.0 || *omega_ > 1.0 || !std::isfinite(*omega_)))
        throw std::invalid_argument("GKSLGenerator: omega must lie in [0, 1]");

    for (const auto& l : lindblads_.ops())
        lindblad_csr_.push_back(kernels::SparseOperator::from_dense(l));
    for (const auto& l : lindblads_.ops())
        lindblad_adj_csr_.push_back(kernels::SparseOperator::from_dense(l.adjoint()));

    const ComplexMatrix k = sum_ldag_l(lindblad_csr_, dim_);
    const double ch = hamiltonian_weight();
    const double cr = rotating_weight();
    const double cd = dissipator_weight();

    ComplexMatrix left(dim_, dim_);
    ComplexMatrix right(dim_, dim_);
    if (hamiltonian_ && ch != 0.0) {
        kernels::add_scaled(left, -kImag * ch, *hamiltonian_);
        kernels::add_scaled(right, kImag * ch, *hamiltonian_);
    }
    if (rotating_ && cr != 0.0) {
        kernels::add_scaled(left, -kImag * cr, *rotating_);
        kernels::add_scaled(right, kImag * cr, *rotating_);
    }
    kernels::add_scaled(left, -0.5 * cd, k);
    kernels::add_scaled(right, -0.5 * cd, k);
    merged_left_ = kernels::SparseOperator::from_dense(left);
    merged_right_ = kernels::SparseOperator::from_dense(right);
}

void GKSLGenerator::apply(const ComplexMatrix& rho, ComplexMatrix& out,
                          ComplexMatrix& scratch) const {
    if (rho.rows() != dim_ || rho.cols() != dim_)
        throw std::invalid_argument("GKSLGenerator::apply: state dimension mismatch");
    if (out.rows() != dim_ || out.cols() != dim_) out = ComplexMatrix(dim_, dim_);
    if (scratch.rows() != dim_ || scratch.cols() != dim_) scratch = ComplexMatrix(dim_, dim_);

    kernels::set_zero(out);
    if (merged_left_.nnz() > 0) kernels::add_apply_left(out, 1.0, merged_left_, rho);
    if (merged_right_.nnz() > 0) kernels::add_apply_right(out, 1.0, rho, merged_right_);

    const double cd = dissipator_weight();
    if (cd == 0.0) return;
    for (std::size_t i = 0; i < lindblad_csr_.size(); ++i) {
        const auto& l = lindblad_csr_[i];
        if (l.nnz() == 0) continue;
        if (l.nnz() == 1) {
            // single-arc operator: L rho L^dag touches one entry
            std::size_t row = 0;
            while (l.row_start[row + 1] == l.row_start[row]) ++row;
            const std::size_t src = l.col[0];
            out(row, row) += cd * std::norm(l.val[0]) * rho(src, src);
            continue;
        }
        kernels::set_zero(scratch);
        kernels::add_apply_left(scratch, 1.0, l, rho);
        kernels::add_apply_right(out, cd, scratch, lindblad_adj_csr_[i]);
    }
}

ComplexMatrix rhs(const GKSLGenerator& gen, const DensityMatrix& rho) {
    if (rho.dim() != gen.dim()) throw std::invalid_argument("rhs: dimension mismatch");
    ComplexMatrix out(gen.dim(), gen.dim());
    ComplexMatrix scratch(gen.dim(), gen.dim());
    gen.apply(rho.matrix(), out, scratch);
    return out;
}

ComplexMatrix build_superoperator(const GKSLGenerator& gen) {
    const std::size_t dim = gen.dim();
    if (dim > kMaxSuperoperatorDim)
        throw std::length_error("build_superoperator: dimension exceeds the dim<=64 budget");
    const ComplexMatrix id = ComplexMatrix::identity(dim);
    ComplexMatrix g(dim * dim, dim * dim);

    const double ch = gen.hamiltonian_weight();
    const double cr = gen.rotating_weight();
    const double cd = gen.dissipator_weight();
    if (gen.hamiltonian() && ch != 0.0) {
        const ComplexMatrix& h = *gen.hamiltonian();
        kernels::add_scaled(g, -kImag * ch, kron(h, id));
        kernels::add_scaled(g, kImag * ch, kron(id, h.transpose()));
    }
    if (gen.rotating() && cr != 0.0) {
        const ComplexMatrix& h = *gen.rotating();
        kernels::add_scaled(g, -kImag * cr, kron(h, id));
        kernels::add_scaled(g, kImag * cr, kron(id, h.transpose()));
    }
    if (cd != 0.0) {
        ComplexMatrix k(dim, dim);
        for (const auto& l : gen.lindblads().ops()) {
            kernels::add_scaled(g, cd, kron(l, l.conjugate()));
            k += l.adjoint() * l;
        }
        kernels::add_scaled(g, -0.5 * cd, kron(k, id));
        kernels::add_scaled(g, -0.5 * cd, kron(id, k.transpose()));
    }
    return g;
}

namespace {

// vec_out = s * vec_in for the dim^2 superoperator
void superop_matvec(const ComplexMatrix& s, std::span<const cplx> in, std::span<cplx> out) {
    const std::int64_t n = static_cast<std::int64_t>(s.rows());
#pragma omp parallel for schedule(static) \
    if (s.element_count() > kernels::kParallelThreshold)
    for (std::int64_t i = 0; i < n; ++i) {
        const cplx* row = s.data() + static_cast<std::size_t>(i) * s.cols();
        cplx acc{};
        for (std::size_t j = 0; j < s.cols(); ++j) acc += row[j] * in[j];
        out[i] = acc;
    }
}

}  // namespace

void evolve_expm_series(const GKSLGenerator& gen, const DensityMatrix& rho0,
                        std::span<const double> times, const SnapshotCallback& cb) {
    if (rho0.dim() != gen.dim()) throw std::invalid_argument("evolve_expm: dimension mismatch");
    if (gen.dim() > kMaxSuperoperatorDim)
        throw std::length_error("evolve_expm: dimension exceeds the dim<=64 budget");
    check_times(times);

    const ComplexMatrix g = build_superoperator(gen);
    std::vector<cplx> cur = vectorize(rho0.matrix());
    std::vector<cplx> next(cur.size());
    double t_prev = 0.0;
    double cached_dt = -1.0;
    ComplexMatrix propagator;
    for (std::size_t idx = 0; idx < times.size(); ++idx) {
        const double dt = times[idx] - t_prev;
        if (dt > 0.0) {
            if (dt != cached_dt) {
                ComplexMatrix scaled = g;
                scaled *= cplx{dt};
                propagator = expm(scaled);
                cached_dt = dt;
            }
            superop_matvec(propagator, cur, next);
            cur.swap(next);
            t_prev = times[idx];
        }
        cb(idx, times[idx], validate_evolved(devectorize(cur, gen.dim()), times[idx]));
    }
}

DensityMatrix evolve_expm(const GKSLGenerator& gen, const DensityMatrix& rho0, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("evolve_expm: time must be non-negative");
    std::optional<DensityMatrix> result;
    const double times[] = {t};
    evolve_expm_series(gen, rho0, times,
                       [&](std::size_t, double, const DensityMatrix& dm) { result = dm; });
    return *result;
}

namespace {

// Dormand-Prince 5(4) with FSAL and PI-free step control.
class Dopri5 {
public:
    Dopri5(const GKSLGenerator& gen, const ComplexMatrix& y0, const EvolveOptions& opts)
        : gen_(gen),
          opts_(opts),
          y_(y0),
          ynew_(gen.dim(), gen.dim()),
          ytmp_(gen.dim(), gen.dim()),
          err_(gen.dim(), gen.dim()),
          zero_(gen.dim(), gen.dim()),
          scratch_(gen.dim(), gen.dim()),
          h_(opts.initial_step) {
        for (auto& k : k_) k = ComplexMatrix(gen.dim(), gen.dim());
    }

    const ComplexMatrix& state() const { return y_; }
    double time() const { return t_; }

    void advance_to(double t_target) {
        const double tiny = 1e-14 * std::max(1.0, t_target);
        while (t_ < t_target - tiny) {
            if (++steps_ > opts_.max_steps)
                throw std::runtime_error("evolve_ode: step limit exceeded");
            const double h = std::min(h_, t_target - t_);
            if (h < 1e-14 * std::max(1.0, std::abs(t_)))
                throw std::runtime_error("evolve_ode: step size underflow");
            attempt(h);
        }
    }

private:
    using Term = std::pair<cplx, const ComplexMatrix*>;

    void attempt(double h) {
        if (!fsal_valid_) {
            gen_.apply(y_, k_[0], scratch_);
            fsal_valid_ = true;
        }
        const Term s2[] = {{h * kA21, &k_[0]}};
        kernels::lincomb(ytmp_, y_, s2);
        gen_.apply(ytmp_, k_[1], scratch_);
        const Term s3[] = {{h * kA31, &k_[0]}, {h * kA32, &k_[1]}};
        kernels::lincomb(ytmp_, y_, s3);
        gen_.apply(ytmp_, k_[2], scratch_);
        const Term s4[] = {{h * kA41, &k_[0]}, {h * kA42, &k_[1]}, {h * kA43, &k_[2]}};
        kernels::lincomb(ytmp_, y_, s4);
        gen_.apply(ytmp_, k_[3], scratch_);
        const Term s5[] = {
            {h * kA51, &k_[0]}, {h * kA52, &k_[1]}, {h * kA53, &k_[2]}, {h * kA54, &k_[3]}};
        kernels::lincomb(ytmp_, y_, s5);
        gen_.apply(ytmp_, k_[4], scratch_);
        const Term s6[] = {{h * kA61, &k_[0]},
                           {h * kA62, &k_[1]},
                           {h * kA63, &k_[2]},
                           {h * kA64, &k_[3]},
                           {h * kA65, &k_[4]}};
        kernels::lincomb(ytmp_, y_, s6);
        gen_.apply(ytmp_, k_[5], scratch_);
        const Term s7[] = {{h * kB1, &k_[0]},
                           {h * kB3, &k_[2]},
                           {h * kB4, &k_[3]},
                           {h * kB5, &k_[4]},
                           {h * kB6, &k_[5]}};
        kernels::lincomb(ynew_, y_, s7);
        gen_.apply(ynew_, k_[6], scratch_);

        const Term se[] = {{h * kD1, &k_[0]},
                           {h * kD3, &k_[2]},
                           {h * kD4, &k_[3]},
                           {h * kD5, &k_[4]},
                           {h * kD6, &k_[5]},
                           {h * kD7, &k_[6]}};
        kernels::lincomb(err_, zero_, se);
        const double err = err_.max_abs() / opts_.abs_tol;

        if (err <= 1.0) {
            t_ += h;
            std::swap(y_, ynew_);
            std::swap(k_[0], k_[6]);  // FSAL
            const double factor =
                err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
            h_ = h * factor;
        } else {
            h_ = h * std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
        }
    }

    static constexpr double kA21 = 1.0 / 5.0;
    static constexpr double kA31 = 3.0 / 40.0, kA32 = 9.0 / 40.0;
    static constexpr double kA41 = 44.0 / 45.0, kA42 = -56.0 / 15.0, kA43 = 32.0 / 9.0;
    static constexpr double kA51 = 19372.0 / 6561.0, kA52 = -25360.0 / 2187.0,
                            kA53 = 64448.0 / 6561.0, kA54 = -212.0 / 729.0;
    static constexpr double kA61 = 9017.0 / 3168.0, kA62 = -355.0 / 33.0,
                            kA63 = 46732.0 / 5247.0, kA64 = 49.0 / 176.0,
                            kA65 = -5103.0 / 18656.0;
    static constexpr double kB1 = 35.0 / 384.0, kB3 = 500.0 / 1113.0, kB4 = 125.0 / 192.0,
                            kB5 = -2187.0 / 6784.0, kB6 = 11.0 / 84.0;
    static constexpr double kD1 = 71.0 / 57600.0, kD3 = -71.0 / 16695.0, kD4 = 71.0 / 1920.0,
                            kD5 = -17253.0 / 339200.0, kD6 = 22.0 / 525.0, kD7 = -1.0 / 40.0;

    const GKSLGenerator& gen_;
    EvolveOptions opts_;
    ComplexMatrix y_, ynew_, ytmp_, err_, zero_, scratch_;
    ComplexMatrix k_[7];
    double t_ = 0.0;
    double h_;
    bool fsal_valid_ = false;
    std::size_t steps_ = 0;
};

}  // namespace

void evolve_ode_series(const GKSLGenerator& gen, const DensityMatrix& rho0,
                       std::span<const double> times, const EvolveOptions& opts,
                       const SnapshotCallback& cb) {
    if (rho0.dim() != gen.dim()) throw std::invalid_argument("evolve_ode: dimension mismatch");
    if (opts.abs_tol <= 0.0 || opts.initial_step <= 0.0)
        throw std::invalid_argument("evolve_ode: tolerance and initial step must be positive");
    check_times(times);

    Dopri5 stepper(gen, rho0.matrix(), opts);
    for (std::size_t idx = 0; idx < times.size(); ++idx) {
        stepper.advance_to(times[idx]);
        cb(idx, times[idx], validate_evolved(stepper.state(), times[idx]));
    }
}

DensityMatrix evolve_ode(const GKSLGenerator& gen, const DensityMatrix& rho0, double t,
                         const EvolveOptions& opts) {
    if (!(t >= 0.0)) throw std::invalid_argument("evolve_ode: time must be non-negative");
    std::optional<DensityMatrix> result;
    const double times[] = {t};
    evolve_ode_series(gen, rho0, times, opts,
                      [&](std::size_t, double, const DensityMatrix& dm) { result = dm; });
    return *result;
}

cplx transition_rate(const GKSLGenerator& gen, std::size_t v, std::size_t w, std::size_t v_to,
                     std::size_t w_to) {
    const std::size_t dim = gen.dim();
    if (v >= dim || w >= dim || v_to >= dim || w_to >= dim)
        throw std::invalid_argument("transition_rate: index out of range");

    const double ch = gen.hamiltonian_weight();
    const double cr = gen.rotating_weight();
    const double cd = gen.dissipator_weight();

    cplx rate{};
    auto ham_part = [&](std::size_t a, std::size_t b, cplx coeff) {
        cplx acc{};
        if (gen.hamiltonian() && ch != 0.0) acc += ch * (*gen.hamiltonian())(a, b);
        if (gen.rotating() && cr != 0.0) acc += cr * (*gen.rotating())(a, b);
        return coeff * acc;
    };
    cplx k_vtov{};
    cplx k_wwto{};
    for (const auto& l : gen.lindblads().ops()) {
        for (std::size_t x = 0; x < dim; ++x) {
            k_vtov += std::conj(l(x, v_to)) * l(x, v);
            k_wwto += std::conj(l(x, w)) * l(x, w_to);
        }
    }
    if (w == w_to) rate += ham_part(v_to, v, -kImag) - 0.5 * cd * k_vtov;
    if (v == v_to) rate += ham_part(w, w_to, kImag) - 0.5 * cd * k_wwto;
    for (const auto& l : gen.lindblads().ops())
        rate += cd * l(v_to, v) * std::conj(l(w_to, w));
    return rate;
}

StationaryResult stationary_state(const GKSLGenerator& gen, const DensityMatrix& rho0,
                                  const StationaryOptions& opts) {
    DensityMatrix cur = rho0;
    ComplexMatrix deriv(gen.dim(), gen.dim());
    ComplexMatrix scratch(gen.dim(), gen.dim());

    auto residual_of = [&](const DensityMatrix& dm) {
        gen.apply(dm.matrix(), deriv, scratch);
        return deriv.max_abs();
    };

    double residual = residual_of(cur);
    if (residual < opts.residual_tol) return {cur, 0.0, residual, true};

    const bool use_expm = gen.dim() <= kMaxSuperoperatorDim;
    std::optional<ComplexMatrix> superop;
    if (use_expm) superop = build_superoperator(gen);

    double t_cur = 0.0;
    double horizon = opts.initial_horizon;
    while (true) {
        horizon = std::min(horizon, opts.horizon_cap);
        const double delta = horizon - t_cur;
        if (delta > 0.0) {
            if (use_expm) {
                ComplexMatrix scaled = *superop;
                scaled *= cplx{delta};
                const ComplexMatrix propagator = expm(scaled);
                std::vector<cplx> vec = vectorize(cur.matrix());
                std::vector<cplx> out(vec.size());
                superop_matvec(propagator, vec, out);
                cur = validate_evolved(devectorize(out, gen.dim()), horizon);
            } else {
                cur = evolve_ode(gen, cur, delta, opts.ode);
            }
            t_cur = horizon;
        }
        residual = residual_of(cur);
        if (residual < opts.residual_tol) return {cur, t_cur, residual, true};
        if (t_cur >= opts.horizon_cap) return {cur, t_cur, residual, false};
        horizon *= 2.0;
    }
}

}  // namespace qsw
