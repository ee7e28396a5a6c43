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

#include "isinglab/bell.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "isinglab/errors.hpp"

namespace isinglab {

void BellSplit::validate() const {
    auto ok = [](int d) { return d == 2 || d == 4; };
    if (!ok(dim_a) || !ok(dim_b)) {
        throw MalformedInput("bell split factors must have dimension 2 or 4");
    }
}

namespace {

Matrix pauli(int k) {
    Matrix s(2, 2);
    switch (k) {
        case 0: s << 1, 0, 0, 1; break;
        case 1: s << 0, 1, 1, 0; break;
        case 2: s << 0, Complex(0, -1), Complex(0, 1), 0; break;
        default: s << 1, 0, 0, -1; break;
    }
    return s;
}

/** Self-adjoint coefficient basis of one factor. Every member is Hermitian
 *  with operator norm one, so coefficient balls below stay inside the
 *  contraction set. */
std::vector<Matrix> factor_basis(int dim, bool diagonal) {
    std::vector<Matrix> basis;
    if (dim == 2) {
        if (diagonal) {
            basis = {pauli(0), pauli(3)};
        } else {
            basis = {pauli(0), pauli(1), pauli(2), pauli(3)};
        }
        return basis;
    }
    const std::vector<int> picks = diagonal ? std::vector<int>{0, 3}
                                            : std::vector<int>{0, 1, 2, 3};
    for (int i : picks) {
        for (int j : picks) {
            basis.push_back(Eigen::kroneckerProduct(pauli(i), pauli(j)).eval());
        }
    }
    return basis;
}

/** Feasibility radius of one coefficient block. For a single Pauli vector
 *  the operator norm is exactly |p0| + |p_vec|_2; for Pauli pairs (and for
 *  diagonal blocks) the absolute coefficient sum dominates it. A radius at
 *  most one therefore certifies a contraction. */
double feasibility_radius(const Eigen::VectorXd& p, int dim, bool diagonal) {
    if (dim == 2 && !diagonal) {
        return std::abs(p(0)) + p.tail(3).norm();
    }
    return p.lpNorm<1>();
}

void clip_block(Eigen::VectorXd& p, int dim, bool diagonal) {
    const double s = feasibility_radius(p, dim, diagonal);
    if (s > 1.0) p /= s;
}

Matrix build_side(const Eigen::VectorXd& p, const std::vector<Matrix>& basis) {
    Matrix out = Matrix::Zero(basis.front().rows(), basis.front().cols());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        out += p(static_cast<Eigen::Index>(k)) * basis[k];
    }
    return out;
}

void require_density(const Matrix& rho, int dim) {
    if (rho.rows() != dim || rho.cols() != dim) {
        throw MalformedInput("density matrix does not match the split dimension");
    }
    if ((rho - rho.adjoint()).lpNorm<1>() > 1e-9 ||
        std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-9) {
        throw MalformedInput("density matrix must be self-adjoint with unit trace");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9) {
        throw MalformedInput("density matrix must be positive semidefinite");
    }
}

void require_contraction(const Matrix& x, int dim) {
    if (x.rows() != dim || x.cols() != dim) {
        throw MalformedInput("side observable does not match its factor dimension");
    }
    if ((x - x.adjoint()).lpNorm<1>() > 1e-9) {
        throw MalformedInput("side observable must be self-adjoint");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(x, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().cwiseAbs().maxCoeff() > 1.0 + 1e-9) {
        throw MalformedInput("side observable must be a contraction");
    }
}

double signed_correlation(const Matrix& rho, const Matrix& x1, const Matrix& x2,
                          const Matrix& y1, const Matrix& y2) {
    const Matrix r = 0.5 * (Eigen::kroneckerProduct(x1, (y1 + y2).eval()) +
                            Eigen::kroneckerProduct(x2, (y1 - y2).eval()));
    return (rho * r).trace().real();
}

double correlation_value(const Matrix& rho, const Matrix& x1, const Matrix& x2,
                         const Matrix& y1, const Matrix& y2) {
    return std::abs(signed_correlation(rho, x1, x2, y1, y2));
}

/** Vertex of the feasibility ball maximizing the linear functional with the
 *  given coefficients; the attained value is the ball's dual norm of g. */
Eigen::VectorXd ball_argmax(const Eigen::VectorXd& g, int dim, bool diagonal) {
    Eigen::VectorXd p = Eigen::VectorXd::Zero(g.size());
    if (dim == 2 && !diagonal) {
        const double vec_norm = g.tail(3).norm();
        if (std::abs(g(0)) >= vec_norm) {
            if (g(0) != 0.0) p(0) = g(0) > 0.0 ? 1.0 : -1.0;
        } else {
            p.tail(3) = g.tail(3) / vec_norm;
        }
        return p;
    }
    Eigen::Index top = 0;
    const double magnitude = g.cwiseAbs().maxCoeff(&top);
    if (magnitude > 0.0) p(top) = g(top) > 0.0 ? 1.0 : -1.0;
    return p;
}

}  // namespace

double bell_value(const Matrix& rho, const BellSplit& split, const Matrix& x1,
                  const Matrix& x2, const Matrix& y1, const Matrix& y2) {
    split.validate();
    require_density(rho, split.total_dimension());
    for (const Matrix* x : {&x1, &x2}) require_contraction(*x, split.dim_a);
    for (const Matrix* y : {&y1, &y2}) require_contraction(*y, split.dim_b);
    return correlation_value(rho, x1, x2, y1, y2);
}

double bell_maximize(const Matrix& rho, const BellSplit& split,
                     const SearchConfig& config, const BellSideOptions& sides) {
    config.validate();
    split.validate();
    require_density(rho, split.total_dimension());

    const std::vector<Matrix> basis_a = factor_basis(split.dim_a, sides.diagonal_a);
    const std::vector<Matrix> basis_b = factor_basis(split.dim_b, sides.diagonal_b);
    std::mt19937_64 eng(config.seed);
    auto uniform = [&]() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };
    auto gauss = [&]() {
        double u = 0.0;
        while (u == 0.0) u = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * uniform());
    };

    double best = 0.0;
    std::int64_t used = 0;
    auto signed_at = [&](const std::array<Matrix, 4>& ops) {
        if (used >= config.budget) {
            throw BudgetExhausted("bell maximizer budget exhausted", best);
        }
        ++used;
        const double value = signed_correlation(rho, ops[0], ops[1], ops[2], ops[3]);
        best = std::max(best, std::abs(value));
        return value;
    };

    struct BlockInfo {
        int dim = 2;
        bool diagonal = false;
        const std::vector<Matrix>* basis = nullptr;
    };
    const std::array<BlockInfo, 4> blocks = {
        BlockInfo{split.dim_a, sides.diagonal_a, &basis_a},
        BlockInfo{split.dim_a, sides.diagonal_a, &basis_a},
        BlockInfo{split.dim_b, sides.diagonal_b, &basis_b},
        BlockInfo{split.dim_b, sides.diagonal_b, &basis_b}};

    // The objective is linear in every single side operator, so each block
    // has a closed-form maximizer over its coefficient ball: see-saw sweeps
    // are monotone and converge to a local optimum of |phi(R)|.
    constexpr int kStarts = 12;
    constexpr int kMaxSweeps = 60;
    for (int start = 0; start < kStarts; ++start) {
        std::array<Matrix, 4> ops;
        for (int b = 0; b < 4; ++b) {
            const BlockInfo& info = blocks[static_cast<std::size_t>(b)];
            const int size = static_cast<int>(info.basis->size());
            Eigen::VectorXd p(size);
            for (int i = 0; i < size; ++i) p(i) = 0.5 * gauss();
            clip_block(p, info.dim, info.diagonal);
            ops[static_cast<std::size_t>(b)] = build_side(p, *info.basis);
        }

        double value = std::abs(signed_at(ops));
        for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
            const double before = value;
            for (int b = 0; b < 4; ++b) {
                const BlockInfo& info = blocks[static_cast<std::size_t>(b)];
                const int size = static_cast<int>(info.basis->size());
                std::array<Matrix, 4> probe = ops;
                probe[static_cast<std::size_t>(b)] =
                    Matrix::Zero(info.dim, info.dim);
                const double offset = signed_at(probe);
                Eigen::VectorXd g(size);
                for (int i = 0; i < size; ++i) {
                    probe[static_cast<std::size_t>(b)] =
                        (*info.basis)[static_cast<std::size_t>(i)];
                    g(i) = signed_at(probe) - offset;
                }
                Eigen::VectorXd p = ball_argmax(g, info.dim, info.diagonal);
                if (offset < 0.0) p = -p;
                ops[static_cast<std::size_t>(b)] = build_side(p, *info.basis);
                value = std::abs(g.dot(p) + offset);
                best = std::max(best, value);
            }
            if (value - before <= 1e-14 * (1.0 + value)) break;
        }
    }
    return best;
}

Matrix singlet_density() {
    Eigen::Vector4cd psi;
    psi << 0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0;
    return psi * psi.adjoint();
}

Matrix random_density(std::mt19937_64& eng, int dim) {
    auto uniform = [&]() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };
    auto gauss = [&]() {
        double u = 0.0;
        while (u == 0.0) u = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * uniform());
    };
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(), gauss());
    }
    Matrix rho = g * g.adjoint();
    return rho / rho.trace().real();
}

Matrix random_contraction(std::mt19937_64& eng, int dim, bool diagonal) {
    auto uniform = [&]() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };
    auto gauss = [&]() {
        double u = 0.0;
        while (u == 0.0) u = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * uniform());
    };
    const std::vector<Matrix> basis = factor_basis(dim, diagonal);
    Eigen::VectorXd p(static_cast<Eigen::Index>(basis.size()));
    for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = gauss();
    clip_block(p, dim, diagonal);
    return build_side(p, basis);
}

}  // namespace isinglab
