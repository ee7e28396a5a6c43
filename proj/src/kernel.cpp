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

#include "isinglab/kernel.hpp"

#include <cmath>
#include <cstdlib>

#include "isinglab/errors.hpp"

namespace isinglab {

namespace {

constexpr int kMaxKernelSites = 10;

}  // namespace

WindowAlgebra::WindowAlgebra(const Window& window) : window_(window) {
    const int n = window_.site_count();
    if (n < 1 || n > kMaxKernelSites) {
        throw MalformedInput("dense window kernels support 1 to 10 sites");
    }
    size_ = 1 << n;
    signs_.assign(static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_), 1);
    for (int i = 0; i < size_; ++i) {
        const Monomial mi = basis_monomial(i);
        for (int j = 0; j < size_; ++j) {
            const SignedMonomial p = mul(mi, basis_monomial(j));
            signs_[static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) +
                   static_cast<std::size_t>(j)] = static_cast<std::int8_t>(p.sign);
        }
    }
}

Monomial WindowAlgebra::basis_monomial(int mask) const {
    Monomial m;
    for (int b = 0; b < window_.site_count(); ++b) {
        if (mask & (1 << b)) {
            m.sites.push_back(Site::from_doubled(window_.lo_doubled + b));
        }
    }
    return m;
}

int WindowAlgebra::mask_of(const Monomial& m) const {
    int mask = 0;
    for (const Site& s : m.sites) {
        mask |= 1 << window_.index_of(s);
    }
    return mask;
}

Eigen::VectorXcd WindowAlgebra::to_dense(const AlgebraElement& x) const {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(size_);
    for (const auto& [monomial, coeff] : x.terms()) {
        v(mask_of(monomial)) += coeff;
    }
    return v;
}

AlgebraElement WindowAlgebra::from_dense(const Eigen::VectorXcd& v) const {
    AlgebraElement out;
    for (int mask = 0; mask < size_; ++mask) {
        if (std::abs(v(mask)) > kCoeffPrune) {
            out.add_term(basis_monomial(mask), v(mask));
        }
    }
    return out;
}

Eigen::VectorXcd WindowAlgebra::multiply(const Eigen::VectorXcd& a,
                                         const Eigen::VectorXcd& b) const {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(size_);
    for (int i = 0; i < size_; ++i) {
        const Complex ai = a(i);
        if (ai == Complex(0.0, 0.0)) continue;
        const std::size_t row = static_cast<std::size_t>(i) * static_cast<std::size_t>(size_);
        for (int j = 0; j < size_; ++j) {
            out(i ^ j) += static_cast<double>(signs_[row + static_cast<std::size_t>(j)]) *
                          ai * b(j);
        }
    }
    return out;
}

Eigen::RowVectorXcd WindowAlgebra::state_covector(const LatticeState& state) const {
    Eigen::RowVectorXcd phi(size_);
    for (int mask = 0; mask < size_; ++mask) {
        phi(mask) = evaluate(state, AlgebraElement::monomial(basis_monomial(mask)));
    }
    return phi;
}

ScreeningForms::ScreeningForms(const WindowAlgebra& algebra, const LatticeState& state,
                               const std::vector<ProjectionPair>& pairs,
                               const Eigen::MatrixXcd& affine)
    : algebra_(&algebra), affine_(affine) {
    if (affine_.rows() != algebra.basis_size() || affine_.cols() < 1) {
        throw MalformedInput("affine cell map must have one column per parameter "
                             "plus a constant column, one row per basis monomial");
    }
    const Eigen::RowVectorXcd phi = algebra.state_covector(state);
    const int cols = static_cast<int>(affine_.cols());
    const AlgebraElement one = AlgebraElement::identity();

    forms_.reserve(pairs.size());
    for (const auto& pair : pairs) {
        const AlgebraElement ac = one - pair.a;
        const AlgebraElement bc = one - pair.b;
        const std::array<AlgebraElement, 4> corners = {
            mul(pair.a, pair.b), mul(ac, bc), mul(pair.a, bc), mul(ac, pair.b)};

        std::array<CornerForm, 4> pack;
        for (std::size_t u = 0; u < 4; ++u) {
            const Eigen::VectorXcd x = algebra.to_dense(corners[u]);
            CornerForm& f = pack[u];
            f.quad.resize(cols, cols);
            f.left.resize(cols);
            f.right.resize(cols);
            f.plain = (phi * x).value().real();
            std::vector<Eigen::VectorXcd> col_x(static_cast<std::size_t>(cols));
            for (int al = 0; al < cols; ++al) {
                col_x[static_cast<std::size_t>(al)] =
                    algebra.multiply(affine_.col(al), x);
                f.left(al) = (phi * col_x[static_cast<std::size_t>(al)]).value().real();
                f.right(al) = (phi * algebra.multiply(x, affine_.col(al))).value().real();
            }
            for (int al = 0; al < cols; ++al) {
                for (int be = 0; be < cols; ++be) {
                    f.quad(al, be) =
                        (phi * algebra.multiply(col_x[static_cast<std::size_t>(al)],
                                                affine_.col(be)))
                            .value()
                            .real();
                }
            }
        }
        forms_.push_back(std::move(pack));
    }
}

std::array<double, 2> ScreeningForms::celled_values(const CornerForm& f,
                                                    const Eigen::VectorXd& lifted) const {
    const double sandwiched = lifted.dot(f.quad * lifted);
    const double inner = sandwiched;
    const double outer = f.plain - f.left.dot(lifted) - f.right.dot(lifted) + sandwiched;
    return {inner, outer};
}

double ScreeningForms::worst_residual(const Eigen::VectorXd& t) const {
    Eigen::VectorXd lifted(t.size() + 1);
    lifted(0) = 1.0;
    lifted.tail(t.size()) = t;
    double worst = 0.0;
    for (const auto& pack : forms_) {
        const std::array<double, 2> pp = celled_values(pack[0], lifted);
        const std::array<double, 2> mm = celled_values(pack[1], lifted);
        const std::array<double, 2> pm = celled_values(pack[2], lifted);
        const std::array<double, 2> mp = celled_values(pack[3], lifted);
        for (int cell = 0; cell < 2; ++cell) {
            const double r = std::abs(pp[static_cast<std::size_t>(cell)] *
                                          mm[static_cast<std::size_t>(cell)] -
                                      pm[static_cast<std::size_t>(cell)] *
                                          mp[static_cast<std::size_t>(cell)]);
            if (r > worst) worst = r;
        }
    }
    return worst;
}

std::vector<CausalVerdict::Residual> ScreeningForms::residuals(
    const Eigen::VectorXd& t) const {
    Eigen::VectorXd lifted(t.size() + 1);
    lifted(0) = 1.0;
    lifted.tail(t.size()) = t;
    std::vector<CausalVerdict::Residual> out;
    out.reserve(forms_.size() * 2);
    for (std::size_t p = 0; p < forms_.size(); ++p) {
        const auto& pack = forms_[p];
        const std::array<double, 2> pp = celled_values(pack[0], lifted);
        const std::array<double, 2> mm = celled_values(pack[1], lifted);
        const std::array<double, 2> pm = celled_values(pack[2], lifted);
        const std::array<double, 2> mp = celled_values(pack[3], lifted);
        for (std::size_t cell = 0; cell < 2; ++cell) {
            out.push_back({p, cell, std::abs(pp[cell] * mm[cell] - pm[cell] * mp[cell])});
        }
    }
    return out;
}

double ScreeningForms::projection_defect(const Eigen::VectorXd& t) const {
    const Eigen::VectorXcd v = cell_vector(t);
    const Eigen::VectorXcd w = algebra_->multiply(v, v) - v;
    return w.lpNorm<1>();
}

Eigen::VectorXcd ScreeningForms::cell_vector(const Eigen::VectorXd& t) const {
    Eigen::VectorXcd v = affine_.col(0);
    for (int i = 0; i < t.size(); ++i) {
        v += t(i) * affine_.col(i + 1);
    }
    return v;
}

}  // namespace isinglab
