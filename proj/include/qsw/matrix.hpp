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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qsw {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major storage.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix identity(std::size_t n);
    /// Builds from explicit rows; rejects non-rectangular or non-finite input.
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);
    static ComplexMatrix from_data(std::size_t rows, std::size_t cols, std::vector<cplx> data);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t element_count() const { return data_.size(); }
    bool is_square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx scalar);

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    cplx trace() const;
    double max_abs() const;
    /// max |A - A^dagger| over all entries; requires square.
    double hermiticity_defect() const;
    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx scalar, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; rejects size overflow.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Row-stacking vectorization of a square matrix, so that
/// vec(A X B) = kron(A, B^T) vec(X).
std::vector<cplx> vectorize(const ComplexMatrix& m);
ComplexMatrix devectorize(std::span<const cplx> v, std::size_t dim);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
};

/// Ordinary least squares y = slope*x + intercept; needs >= 2 points and
/// non-constant xs.
LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys);

/// Density matrix: Hermitian, unit trace, positive semidefinite within the
/// documented tolerances, all checked at construction.
class DensityMatrix {
public:
    static constexpr double kHermitianTol = 1e-10;
    static constexpr double kTraceTol = 1e-9;
    static constexpr double kEigenvalueTol = 1e-9;

    explicit DensityMatrix(ComplexMatrix m);

    static DensityMatrix basis_state(std::size_t dim, std::size_t index);

    struct Check {
        double hermiticity_defect = 0.0;
        double trace_error = 0.0;
        double min_eigenvalue = 0.0;
        bool finite = true;
        bool ok() const {
            return finite && hermiticity_defect <= kHermitianTol &&
                   trace_error <= kTraceTol && min_eigenvalue >= -kEigenvalueTol;
        }
        std::string describe() const;
    };
    static Check check(const ComplexMatrix& m);

    const ComplexMatrix& matrix() const { return mat_; }
    std::size_t dim() const { return mat_.rows(); }

private:
    ComplexMatrix mat_;
};

}  // namespace qsw
