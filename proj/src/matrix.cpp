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

#include "qsw/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qsw/kernels.hpp"
#include "qsw/linalg.hpp"

namespace qsw {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("from_rows: ragged rows");
        std::size_t j = 0;
        for (const cplx& v : row) m(i, j++) = v;
        ++i;
    }
    if (!m.all_finite()) throw std::invalid_argument("from_rows: non-finite entry");
    return m;
}

ComplexMatrix ComplexMatrix::from_data(std::size_t rows, std::size_t cols,
                                       std::vector<cplx> data) {
    if (data.size() != rows * cols)
        throw std::invalid_argument("from_data: wrong number of entries");
    ComplexMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(data);
    if (!m.all_finite()) throw std::invalid_argument("from_data: non-finite entry");
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    kernels::add_scaled(*this, 1.0, other);
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    kernels::add_scaled(*this, -1.0, other);
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
    for (cplx& v : data_) v *= scalar;
    return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = std::conj(data_[i]);
    return out;
}

cplx ComplexMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace: matrix must be square");
    cplx t{};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::hermiticity_defect() const {
    if (!is_square()) throw std::invalid_argument("hermiticity_defect: matrix must be square");
    double d = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(cplx scalar, ComplexMatrix m) {
    m *= scalar;
    return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows(), b.cols());
    kernels::matmul(a, b, out);
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t max_dim = 1u << 20;
    if (a.rows() != 0 && b.rows() != 0 &&
        (a.rows() > max_dim / b.rows() || a.cols() > max_dim / std::max<std::size_t>(b.cols(), 1)))
        throw std::length_error("kron: result dimensions too large");
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx av = a(i, j);
            if (av == cplx{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = av * b(k, l);
        }
    return out;
}

std::vector<cplx> vectorize(const ComplexMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("vectorize: matrix must be square");
    return std::vector<cplx>(m.data(), m.data() + m.element_count());
}

ComplexMatrix devectorize(std::span<const cplx> v, std::size_t dim) {
    if (v.size() != dim * dim) throw std::invalid_argument("devectorize: length != dim^2");
    ComplexMatrix m(dim, dim);
    std::copy(v.begin(), v.end(), m.data());
    return m;
}

LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("linear_fit: length mismatch");
    if (xs.size() < 2) throw std::invalid_argument("linear_fit: need at least 2 points");
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("linear_fit: xs are all equal");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    return fit;
}

std::string DensityMatrix::Check::describe() const {
    std::ostringstream os;
    os << "hermiticity defect " << hermiticity_defect << ", trace error " << trace_error
       << ", min eigenvalue " << min_eigenvalue << (finite ? "" : ", non-finite entries");
    return os.str();
}

DensityMatrix::Check DensityMatrix::check(const ComplexMatrix& m) {
    Check c;
    if (!m.is_square()) {
        c.finite = false;
        return c;
    }
    c.finite = m.all_finite();
    if (!c.finite) return c;
    c.hermiticity_defect = m.hermiticity_defect();
    c.trace_error = std::abs(m.trace() - cplx{1.0});
    if (c.hermiticity_defect <= 1e-8) {
        const auto eigs = hermitian_eigenvalues(m);
        c.min_eigenvalue = eigs.empty() ? 0.0 : eigs.front();
    } else {
        c.min_eigenvalue = -std::numeric_limits<double>::infinity();
    }
    return c;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
    const Check c = check(mat_);
    if (!c.ok())
        throw std::invalid_argument("DensityMatrix: invariants violated (" + c.describe() + ")");
}

DensityMatrix DensityMatrix::basis_state(std::size_t dim, std::size_t index) {
    if (index >= dim) throw std::invalid_argument("basis_state: index out of range");
    ComplexMatrix m(dim, dim);
    m(index, index) = 1.0;
    return DensityMatrix(std::move(m));
}

}  // namespace qsw
