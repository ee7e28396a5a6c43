// Copyright 2026 The isinglab authors
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

#include "isinglab/rep.hpp"

#include <bit>
#include <cstdint>

#include "isinglab/errors.hpp"

namespace isinglab {

Window Window::covering(const AlgebraElement& x) {
    std::vector<Site> sites = x.support();
    if (sites.empty()) return {0, 0};
    return {sites.front().doubled, sites.back().doubled};
}

int Window::index_of(Site s) const {
    if (!contains(s)) {
        throw SiteOutOfWindow("site " + to_string(s) + " outside window [" +
                              to_string(Site{lo_doubled}) + ", " +
                              to_string(Site{hi_doubled}) + "]");
    }
    return s.doubled - lo_doubled;
}

namespace {

// The image of a monomial maps each basis state |b> to a phase times
// |b ^ flip_mask|. Site j contributes phase (-1)^{bit j of b} and flips
// bit j+1; factors are applied left to right.
struct MonomialAction {
    std::uint64_t flip_mask = 0;
    std::uint64_t phase_mask = 0;  // accumulated Z positions
    int global_sign = 1;           // from Z factors acting on already-flipped bits

    double phase(std::uint64_t b) const {
        int z = std::popcount(b & phase_mask) & 1;
        return (z ? -1.0 : 1.0) * static_cast<double>(global_sign);
    }
};

MonomialAction action_of(const Monomial& m, const Window& window) {
    MonomialAction act;
    // Apply factors right to left onto a ket: for x = F1 F2 ... Fk,
    // x|b> = F1(F2(...(Fk|b>))). Track the flips seen so far so each Z
    // reads the correct intermediate bit.
    std::uint64_t flips_so_far = 0;
    for (auto it = m.sites.rbegin(); it != m.sites.rend(); ++it) {
        int j = window.index_of(*it);
        std::uint64_t zbit = 1ULL << j;
        std::uint64_t xbit = 1ULL << (j + 1);
        // X first (rightmost in Z_j X_{j+1} acting on the ket), then Z.
        flips_so_far ^= xbit;
        if (flips_so_far & zbit) act.global_sign = -act.global_sign;
        act.phase_mask ^= zbit;
    }
    act.flip_mask = flips_so_far;
    return act;
}

}  // namespace

Matrix rep(const Monomial& m, const Window& window) {
    long dim = window.dimension();
    Matrix out = Matrix::Zero(dim, dim);
    MonomialAction act = action_of(m, window);
    for (long b = 0; b < dim; ++b) {
        auto ub = static_cast<std::uint64_t>(b);
        out(static_cast<long>(ub ^ act.flip_mask), b) = act.phase(ub);
    }
    return out;
}

Matrix rep(const AlgebraElement& x, const Window& window) {
    long dim = window.dimension();
    Matrix out = Matrix::Zero(dim, dim);
    for (const auto& [m, c] : x.terms()) {
        MonomialAction act = action_of(m, window);
        for (long b = 0; b < dim; ++b) {
            auto ub = static_cast<std::uint64_t>(b);
            out(static_cast<long>(ub ^ act.flip_mask), b) += c * act.phase(ub);
        }
    }
    return out;
}

AlgebraElement unrep(const Matrix& mat, const Window& window) {
    // Monomial images are signed subset-permutation matrices; distinct
    // monomials occupy distinct diagonals, so Hilbert-Schmidt projection
    // recovers each coefficient independently.
    AlgebraElement out;
    int n = window.site_count();
    long dim = window.dimension();
    for (std::uint64_t occ = 0; occ < (1ULL << n); ++occ) {
        Monomial m;
        for (int j = 0; j < n; ++j) {
            if (occ & (1ULL << j)) m.sites.push_back(Site{window.lo_doubled + j});
        }
        MonomialAction act = action_of(m, window);
        Complex acc = 0.0;
        for (long b = 0; b < dim; ++b) {
            auto ub = static_cast<std::uint64_t>(b);
            // <rep(m) e_b, mat e_b> accumulated over b gives tr(rep(m)^* mat).
            acc += act.phase(ub) * mat(static_cast<long>(ub ^ act.flip_mask), b);
        }
        out.add_term(m, acc / static_cast<double>(dim));
    }
    return out;
}

Complex normalized_trace(const Matrix& m) {
    return m.trace() / static_cast<double>(m.rows());
}

double min_eigenvalue(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

}  // namespace isinglab
