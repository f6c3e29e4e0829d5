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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qsw/kernels.hpp"
#include "qsw/linalg.hpp"

namespace qsw {

namespace {

double norm_1(const ComplexMatrix& m) {
    double best = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m.rows(); ++i) s += std::abs(m(i, j));
        best = std::max(best, s);
    }
    return best;
}

// Solves a x = b with partial-pivot LU; a and b are consumed.
ComplexMatrix lu_solve(ComplexMatrix a, ComplexMatrix b) {
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(a(i, k));
            if (v > best) {
                best = v;
                pivot = i;
            }
        }
        if (best == 0.0) throw std::runtime_error("expm: singular Pade denominator");
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(b(k, j), b(pivot, j));
        }
        const cplx akk = a(k, k);
        const std::int64_t rows_below = static_cast<std::int64_t>(n - k - 1);
#pragma omp parallel for schedule(static) \
    if (static_cast<std::size_t>(rows_below) * n > kernels::kParallelThreshold)
        for (std::int64_t r = 0; r < rows_below; ++r) {
            const std::size_t i = k + 1 + static_cast<std::size_t>(r);
            const cplx factor = a(i, k) / akk;
            if (factor == cplx{}) continue;
            a(i, k) = factor;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
            for (std::size_t j = 0; j < n; ++j) b(i, j) -= factor * b(k, j);
        }
    }
    // back substitution
    for (std::size_t kk = n; kk-- > 0;) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx acc = b(kk, j);
            for (std::size_t p = kk + 1; p < n; ++p) acc -= a(kk, p) * b(p, j);
            b(kk, j) = acc / a(kk, kk);
        }
    }
    return b;
}

// Pade numerator/denominator for given coefficients over even powers.
void pade_uv(const ComplexMatrix& a, const std::vector<ComplexMatrix>& even_powers,
             std::span<const double> coeff, ComplexMatrix& u, ComplexMatrix& v) {
    const std::size_t n = a.rows();
    ComplexMatrix odd(n, n);
    ComplexMatrix even(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        odd(i, i) = coeff[1];
        even(i, i) = coeff[0];
    }
    // even_powers[p] = A^(2(p+1))
    for (std::size_t p = 0; p < even_powers.size(); ++p) {
        const std::size_t k = 2 * (p + 1);
        if (k + 1 < coeff.size()) kernels::add_scaled(odd, coeff[k + 1], even_powers[p]);
        kernels::add_scaled(even, coeff[k], even_powers[p]);
    }
    kernels::matmul(a, odd, u);
    v = std::move(even);
}

}  // namespace

ComplexMatrix expm(const ComplexMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("expm: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 0) return ComplexMatrix(0, 0);

    static constexpr double kTheta3 = 1.495585217958292e-2;
    static constexpr double kTheta5 = 2.539398330063230e-1;
    static constexpr double kTheta7 = 9.504178996162932e-1;
    static constexpr double kTheta9 = 2.097847961257068e0;
    static constexpr double kTheta13 = 5.371920351148152e0;

    static const std::vector<double> b3 = {120, 60, 12, 1};
    static const std::vector<double> b5 = {30240, 15120, 3360, 420, 30, 1};
    static const std::vector<double> b7 = {17297280, 8648640, 1995840, 277200, 25200, 1512, 56, 1};
    static const std::vector<double> b9 = {17643225600.0, 8821612800.0, 2075673600.0,
                                           302702400.0,   30270240.0,   2162160.0,
                                           110880.0,      3960.0,       90.0,
                                           1.0};
    static const std::vector<double> b13 = {
        6.4764752532480000e16, 3.2382376266240000e16, 7.7717703038976000e15,
        1.1873537964288000e15, 1.2906019526400000e14, 1.0559470521600000e13,
        6.7044257280000000e11, 3.3522128640000000e10, 1.3232419200000000e9,
        4.0840800000000000e7,  9.6096000000000000e5,  1.6380000000000000e4,
        1.8200000000000000e2,  1.0};

    const double norm = norm_1(m);
    ComplexMatrix a = m;
    int squarings = 0;
    if (norm > kTheta13) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
        a *= cplx{std::ldexp(1.0, -squarings)};
    }

    ComplexMatrix a2(n, n);
    kernels::matmul(a, a, a2);
    std::vector<ComplexMatrix> even_powers;
    even_powers.push_back(std::move(a2));

    const std::vector<double>* coeff = &b13;
    if (norm <= kTheta3) {
        coeff = &b3;
    } else if (norm <= kTheta5) {
        coeff = &b5;
    } else if (norm <= kTheta7 || norm <= kTheta9) {
        coeff = norm <= kTheta7 ? &b7 : &b9;
    }
    const std::size_t order = coeff->size() - 1;
    // powers needed: up to A^6 for order 13 (higher terms are factored), A^8 for order 9
    const std::size_t max_even = order == 13 ? 6 : order - 1;
    while (2 * even_powers.size() < max_even) {
        ComplexMatrix next(n, n);
        kernels::matmul(even_powers.front(), even_powers.back(), next);
        even_powers.push_back(std::move(next));
    }

    ComplexMatrix u(n, n), v(n, n);
    if (order == 13) {
        const ComplexMatrix& p2 = even_powers[0];
        const ComplexMatrix& p4 = even_powers[1];
        const ComplexMatrix& p6 = even_powers[2];
        const auto& b = *coeff;
        ComplexMatrix w1(n, n), w2(n, n), z1(n, n), z2(n, n);
        std::pair<cplx, const ComplexMatrix*> wt1[] = {{b[13], &p6}, {b[11], &p4}, {b[9], &p2}};
        kernels::lincomb(w1, ComplexMatrix(n, n), wt1);
        ComplexMatrix id_b1 = ComplexMatrix::identity(n);
        id_b1 *= cplx{b[1]};
        std::pair<cplx, const ComplexMatrix*> wt2[] = {{b[7], &p6}, {b[5], &p4}, {b[3], &p2}};
        kernels::lincomb(w2, id_b1, wt2);
        std::pair<cplx, const ComplexMatrix*> zt1[] = {{b[12], &p6}, {b[10], &p4}, {b[8], &p2}};
        kernels::lincomb(z1, ComplexMatrix(n, n), zt1);
        ComplexMatrix id_b0 = ComplexMatrix::identity(n);
        id_b0 *= cplx{b[0]};
        std::pair<cplx, const ComplexMatrix*> zt2[] = {{b[6], &p6}, {b[4], &p4}, {b[2], &p2}};
        kernels::lincomb(z2, id_b0, zt2);

        ComplexMatrix t(n, n);
        kernels::matmul(p6, w1, t);
        t += w2;
        kernels::matmul(a, t, u);
        kernels::matmul(p6, z1, v);
        v += z2;
    } else {
        pade_uv(a, even_powers, *coeff, u, v);
    }

    ComplexMatrix x = lu_solve(v - u, v + u);
    for (int s = 0; s < squarings; ++s) {
        ComplexMatrix sq(n, n);
        kernels::matmul(x, x, sq);
        x = std::move(sq);
    }
    return x;
}

}  // namespace qsw
