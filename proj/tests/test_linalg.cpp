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

#include <cmath>
#include <cstring>

#include <doctest.h>

#include "qsw/kernels.hpp"
#include "qsw/linalg.hpp"
#include "qsw/matrix.hpp"
#include "qsw/reference.hpp"
#include "test_support.hpp"

using namespace qsw;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("kron identity and scalar factors") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(test::max_diff(kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);

    const ComplexMatrix a = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
    const ComplexMatrix b = ComplexMatrix::from_rows({{2.0}});
    CHECK(test::max_diff(kron(a, b), ComplexMatrix::from_rows({{0.0, 2.0}, {0.0, 0.0}})) == 0.0);
}

TEST_CASE("kron mixed-product identity on random factors") {
    auto rng = test::make_rng();
    for (int rep = 0; rep < 20; ++rep) {
        const ComplexMatrix a = test::random_matrix(3, 3, rng);
        const ComplexMatrix b = test::random_matrix(3, 3, rng);
        const ComplexMatrix x = test::random_matrix(3, 1, rng);
        const ComplexMatrix y = test::random_matrix(3, 1, rng);
        const ComplexMatrix lhs = kron(a, b) * kron(x, y);
        const ComplexMatrix rhs = kron(a * x, b * y);
        CHECK(test::max_diff(lhs, rhs) < 1e-13);
    }
}

TEST_CASE("kron rejects oversized results") {
    const ComplexMatrix tall(1u << 11, 1);
    CHECK_THROWS_AS((void)kron(tall, tall), std::length_error);
}

TEST_CASE("vectorize uses row stacking") {
    const ComplexMatrix m = ComplexMatrix::from_rows({{1.0, 2.0}, {3.0, 4.0}});
    const auto v = vectorize(m);
    REQUIRE(v.size() == 4);
    CHECK(v[0] == cplx{1.0});
    CHECK(v[1] == cplx{2.0});
    CHECK(v[2] == cplx{3.0});
    CHECK(v[3] == cplx{4.0});
    CHECK_THROWS_AS((void)vectorize(ComplexMatrix(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS((void)devectorize(v, 3), std::invalid_argument);
}

TEST_CASE("vectorize round trip and vec(AXB) identity") {
    auto rng = test::make_rng();
    for (int rep = 0; rep < 100; ++rep) {
        const ComplexMatrix a = test::random_matrix(3, 3, rng);
        const ComplexMatrix x = test::random_matrix(3, 3, rng);
        const ComplexMatrix b = test::random_matrix(3, 3, rng);
        CHECK(test::max_diff(devectorize(vectorize(x), 3), x) == 0.0);

        const auto lhs = vectorize(a * x * b);
        const ComplexMatrix k = kron(a, b.transpose());
        const auto vx = vectorize(x);
        for (std::size_t i = 0; i < 9; ++i) {
            cplx acc{};
            for (std::size_t j = 0; j < 9; ++j) acc += k(i, j) * vx[j];
            CHECK(std::abs(acc - lhs[i]) < 1e-13);
        }
    }
}

TEST_CASE("expm of zero and diagonal matrices") {
    CHECK(test::max_diff(expm(ComplexMatrix(3, 3)), ComplexMatrix::identity(3)) == 0.0);

    ComplexMatrix d(3, 3);
    d(0, 0) = cplx{0.3, 0.0};
    d(1, 1) = cplx{-1.2, 0.7};
    d(2, 2) = cplx{2.0, -3.0};
    const ComplexMatrix e = expm(d);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j)
                CHECK(std::abs(e(i, j) - std::exp(d(i, i))) < 1e-13);
            else
                CHECK(e(i, j) == cplx{});
        }
    CHECK_THROWS_AS((void)expm(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("expm matches the truncated Taylor oracle") {
    auto rng = test::make_rng();
    for (int rep = 0; rep < 10; ++rep) {
        ComplexMatrix m = test::random_matrix(4, 4, rng);
        m *= cplx{1.0 / (4.0 * m.max_abs())};  // keep the norm at or below ~1
        const ComplexMatrix expected = ref::taylor_expm(m);
        CHECK(test::max_diff(expm(m), expected) < 1e-12);
    }
}

TEST_CASE("expm inverse pairing for moderate norms") {
    auto rng = test::make_rng(7);
    for (int rep = 0; rep < 5; ++rep) {
        ComplexMatrix m = test::random_matrix(5, 5, rng);
        m *= cplx{5.0 / (5.0 * m.max_abs())};
        ComplexMatrix neg = m;
        neg *= cplx{-1.0};
        const ComplexMatrix prod = expm(m) * expm(neg);
        CHECK(test::max_diff(prod, ComplexMatrix::identity(5)) < 1e-10);
    }
}

TEST_CASE("expm keeps block-diagonal structure exactly") {
    auto rng = test::make_rng(11);
    ComplexMatrix m(6, 6);
    const ComplexMatrix top = test::random_matrix(3, 3, rng);
    const ComplexMatrix bottom = test::random_matrix(3, 3, rng);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            m(i, j) = top(i, j);
            m(i + 3, j + 3) = bottom(i, j);
        }
    const ComplexMatrix e = expm(m);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(std::abs(e(i, j + 3)) < 1e-12);
            CHECK(std::abs(e(i + 3, j)) < 1e-12);
        }
}

TEST_CASE("hermitian eigenvalues on known spectra") {
    ComplexMatrix d(3, 3);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    d(2, 2) = 3.0;
    const auto eigs = hermitian_eigenvalues(d);
    REQUIRE(eigs.size() == 3);
    CHECK(eigs[0] == doctest::Approx(1.0));
    CHECK(eigs[1] == doctest::Approx(2.0));
    CHECK(eigs[2] == doctest::Approx(3.0));

    const auto pauli_x = hermitian_eigenvalues(ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
    CHECK(pauli_x[0] == doctest::Approx(-1.0));
    CHECK(pauli_x[1] == doctest::Approx(1.0));

    auto rng = test::make_rng();
    CHECK_THROWS_AS((void)hermitian_eigenvalues(test::random_matrix(3, 3, rng)),
                    std::invalid_argument);
}

TEST_CASE("hermitian eigenvalues satisfy trace identities") {
    auto rng = test::make_rng(3);
    for (int rep = 0; rep < 10; ++rep) {
        const ComplexMatrix h = test::random_hermitian(5, rng);
        const auto eigs = hermitian_eigenvalues(h);
        double sum = 0.0, sum_sq = 0.0;
        for (double e : eigs) {
            sum += e;
            sum_sq += e * e;
        }
        CHECK(std::abs(sum - h.trace().real()) < 1e-10);
        CHECK(std::abs(sum_sq - (h * h).trace().real()) < 1e-10);
    }
}

TEST_CASE("linear fit on exact and random data") {
    {
        const double xs[] = {0.0, 1.0, 2.0, 3.0};
        const double ys[] = {1.0, 3.0, 5.0, 7.0};
        const auto fit = linear_fit(xs, ys);
        CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(fit.intercept == doctest::Approx(1.0).epsilon(1e-14));
    }
    {
        const double xs[] = {0.0, 1.0};
        const double ys[] = {0.0, 3.0};
        CHECK(linear_fit(xs, ys).slope == doctest::Approx(3.0));
    }
    {
        auto rng = test::make_rng(5);
        std::uniform_real_distribution<double> dist(-2.0, 2.0);
        std::vector<double> xs(10), ys(10);
        for (int i = 0; i < 10; ++i) {
            xs[i] = dist(rng);
            ys[i] = dist(rng);
        }
        const auto fit = linear_fit(xs, ys);
        // normal equations: residuals orthogonal to (1, xs)
        double r1 = 0.0, rx = 0.0;
        for (int i = 0; i < 10; ++i) {
            const double r = ys[i] - fit.slope * xs[i] - fit.intercept;
            r1 += r;
            rx += r * xs[i];
        }
        CHECK(std::abs(r1) < 1e-10);
        CHECK(std::abs(rx) < 1e-10);
    }
    const double same[] = {1.0, 1.0, 1.0};
    const double any[] = {1.0, 2.0, 3.0};
    CHECK_THROWS_AS((void)linear_fit(same, any), std::invalid_argument);
    const double one[] = {1.0};
    CHECK_THROWS_AS((void)linear_fit(one, one), std::invalid_argument);
}

TEST_CASE("parallel kernels agree with the serial reference") {
    auto rng = test::make_rng(9);
    for (auto [r, k, c] : {std::tuple{7, 5, 9}, {32, 32, 32}, {65, 40, 17}}) {
        const ComplexMatrix a = test::random_matrix(r, k, rng);
        const ComplexMatrix b = test::random_matrix(k, c, rng);
        ComplexMatrix out(r, c);
        kernels::matmul(a, b, out);
        CHECK(test::max_diff(out, ref::matmul(a, b)) < 1e-13);
    }

    for (std::size_t n : {8u, 40u}) {
        ComplexMatrix dense = test::random_matrix(n, n, rng);
        for (std::size_t i = 0; i < n; ++i)  // thin it out
            for (std::size_t j = 0; j < n; ++j)
                if ((i * 31 + j * 17) % 5 != 0) dense(i, j) = cplx{};
        const auto s = kernels::SparseOperator::from_dense(dense);
        const ComplexMatrix x = test::random_matrix(n, n, rng);

        ComplexMatrix left(n, n);
        kernels::add_apply_left(left, cplx{2.0, -1.0}, s, x);
        ComplexMatrix expected_left = ref::apply_left(s, x);
        expected_left *= cplx{2.0, -1.0};
        CHECK(test::max_diff(left, expected_left) < 1e-13);

        ComplexMatrix right(n, n);
        kernels::add_apply_right(right, cplx{0.5, 0.25}, x, s);
        ComplexMatrix expected_right = ref::apply_right(x, s);
        expected_right *= cplx{0.5, 0.25};
        CHECK(test::max_diff(right, expected_right) < 1e-13);
    }
}

TEST_CASE("kernels are deterministic across repeated runs") {
    auto rng = test::make_rng(13);
    const ComplexMatrix a = test::random_matrix(64, 64, rng);
    const ComplexMatrix b = test::random_matrix(64, 64, rng);
    ComplexMatrix out1(64, 64), out2(64, 64);
    kernels::matmul(a, b, out1);
    kernels::matmul(a, b, out2);
    CHECK(std::memcmp(out1.data(), out2.data(), sizeof(cplx) * out1.element_count()) == 0);
}

TEST_CASE("density matrix invariants are enforced") {
    CHECK_NOTHROW(DensityMatrix::basis_state(4, 2));
    CHECK_NOTHROW(DensityMatrix(ComplexMatrix::from_rows(
        {{0.5, 0.25}, {0.25, 0.5}})));

    // non-Hermitian
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::from_rows({{0.5, 0.3}, {0.0, 0.5}})),
                    std::invalid_argument);
    // trace != 1
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::from_rows({{0.9, 0.0}, {0.0, 0.3}})),
                    std::invalid_argument);
    // negative eigenvalue
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::from_rows({{1.5, 0.0}, {0.0, -0.5}})),
                    std::invalid_argument);
}

TEST_CASE("matrix construction validates finiteness") {
    CHECK_THROWS_AS((void)ComplexMatrix::from_rows({{cplx{std::nan(""), 0.0}}}),
                    std::invalid_argument);
}

TEST_SUITE_END();
