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

#include "qsw/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qsw {

ProbabilityProfile ProbabilityProfile::validated(std::vector<double> values) {
    double sum = 0.0;
    for (double v : values) {
        if (v < -kNegativeTol)
            throw std::runtime_error("ProbabilityProfile: negative probability " +
                                     std::to_string(v));
        sum += v;
    }
    if (std::abs(sum - 1.0) > kSumTol)
        throw std::runtime_error("ProbabilityProfile: probabilities sum to " +
                                 std::to_string(sum));
    return ProbabilityProfile{std::move(values)};
}

ProbabilityProfile vertex_probabilities(const EnlargedGraph& eg, const DensityMatrix& rho) {
    if (rho.dim() != eg.total_dim())
        throw std::invalid_argument("vertex_probabilities: dimension mismatch");
    const int n = eg.base().vertex_count();
    std::vector<double> p(n, 0.0);
    for (int v = 0; v < n; ++v) {
        for (std::size_t i = eg.block_start(v); i < eg.block_start(v) + eg.block_size(v); ++i) {
            const cplx d = rho.matrix()(i, i);
            if (std::abs(d.imag()) > ProbabilityProfile::kImagTol)
                throw std::runtime_error("vertex_probabilities: complex diagonal entry");
            p[v] += d.real();
        }
    }
    return ProbabilityProfile::validated(std::move(p));
}

ProbabilityProfile diagonal_probabilities(const DensityMatrix& rho) {
    std::vector<double> p(rho.dim());
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        const cplx d = rho.matrix()(i, i);
        if (std::abs(d.imag()) > ProbabilityProfile::kImagTol)
            throw std::runtime_error("diagonal_probabilities: complex diagonal entry");
        p[i] = d.real();
    }
    return ProbabilityProfile::validated(std::move(p));
}

double second_moment(std::span<const double> positions, const ProbabilityProfile& profile) {
    if (positions.size() != profile.p.size())
        throw std::invalid_argument("second_moment: one coordinate per vertex required");
    double m = 0.0;
    for (std::size_t v = 0; v < positions.size(); ++v)
        m += profile.p[v] * positions[v] * positions[v];
    return m;
}

std::vector<double> scaling_slopes(std::span<const double> times, std::span<const double> mu2,
                                   std::size_t window) {
    if (times.size() != mu2.size()) throw std::invalid_argument("scaling_slopes: length mismatch");
    if (window < 2 || times.size() < window)
        throw std::invalid_argument("scaling_slopes: need at least `window` points");
    std::vector<double> log_t(times.size()), log_m(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] > 0.0) || !(mu2[i] > 0.0))
            throw std::invalid_argument("scaling_slopes: times and moments must be positive");
        log_t[i] = std::log(times[i]);
        log_m[i] = std::log(mu2[i]);
    }
    std::vector<double> slopes;
    slopes.reserve(times.size() - window + 1);
    for (std::size_t start = 0; start + window <= times.size(); ++start) {
        const auto fit = linear_fit(std::span(log_t).subspan(start, window),
                                    std::span(log_m).subspan(start, window));
        slopes.push_back(fit.slope);
    }
    return slopes;
}

double symmetry_deviation(const ProbabilityProfile& profile, std::size_t center) {
    const std::size_t n = profile.p.size();
    if (center >= n) throw std::invalid_argument("symmetry_deviation: center out of range");
    double dev = 0.0;
    for (std::size_t k = 1; center + k < n && k <= center; ++k)
        dev = std::max(dev, std::abs(profile.p[center + k] - profile.p[center - k]));
    return dev;
}

std::vector<int> identity_embedding(std::size_t dim) {
    std::vector<int> e(dim);
    for (std::size_t i = 0; i < dim; ++i) e[i] = static_cast<int>(i);
    return e;
}

std::vector<int> block_embedding(const EnlargedGraph& eg) {
    std::vector<int> e(eg.total_dim());
    for (std::size_t i = 0; i < eg.total_dim(); ++i) e[i] = eg.representative(i);
    return e;
}

std::vector<VertexPair> detect_moralization(const GKSLGenerator& gen, const Digraph& g,
                                            std::span<const int> embedding) {
    const std::size_t dim = gen.dim();
    if (embedding.size() != dim)
        throw std::invalid_argument("detect_moralization: embedding size must match generator");
    for (int v : embedding)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("detect_moralization: embedding target out of range");

    // M_{x w}^{y w} = B[y][x] + cD sum_L L[y][x] conj(L[w][w]) with
    // B = -i cH H - i cR Hrot - cD/2 sum L^dag L (the generator drift);
    // scanning the first-case pattern of the transition-rate formula.
    const double cd = gen.dissipator_weight();
    ComplexMatrix b(dim, dim);
    const auto& drift = gen.drift();
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t p = drift.row_start[i]; p < drift.row_start[i + 1]; ++p)
            b(i, drift.col[p]) = drift.val[p];

    std::vector<std::vector<cplx>> diags;
    bool any_diag = false;
    for (const auto& l : gen.lindblads().ops()) {
        std::vector<cplx> d(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            d[i] = l(i, i);
            if (d[i] != cplx{}) any_diag = true;
        }
        diags.push_back(std::move(d));
    }

    std::set<VertexPair> found;
    std::vector<std::pair<std::size_t, cplx>> active;  // (lindblad index, L[y][x])
    for (std::size_t x = 0; x < dim; ++x) {
        for (std::size_t y = 0; y < dim; ++y) {
            const int va = embedding[x];
            const int vb = embedding[y];
            if (va == vb || !g.non_adjacent(va, vb)) continue;
            const VertexPair pair{std::min(va, vb), std::max(va, vb)};
            if (found.contains(pair)) continue;
            active.clear();
            for (std::size_t li = 0; li < diags.size(); ++li) {
                const cplx lyx = gen.lindblads().ops()[li](y, x);
                if (lyx != cplx{}) active.emplace_back(li, lyx);
            }
            bool hit = false;
            const std::size_t w_count = (any_diag && !active.empty()) ? dim : 1;
            for (std::size_t w = 0; w < w_count && !hit; ++w) {
                cplx rate = b(y, x);
                for (const auto& [li, lyx] : active) rate += cd * lyx * std::conj(diags[li][w]);
                hit = std::abs(rate) > kMoralizationThreshold;
            }
            if (hit) found.insert(pair);
        }
    }
    return std::vector<VertexPair>(found.begin(), found.end());
}

}  // namespace qsw
