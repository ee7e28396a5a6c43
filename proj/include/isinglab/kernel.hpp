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

#ifndef ISINGLAB_KERNEL_HPP
#define ISINGLAB_KERNEL_HPP

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "isinglab/algebra.hpp"
#include "isinglab/net.hpp"
#include "isinglab/qcausal.hpp"
#include "isinglab/rep.hpp"

namespace isinglab {

/** Dense coefficient arithmetic for elements supported on a fixed window.
 *
 *  Basis monomials are indexed by occupancy bitmask: bit b of a mask marks
 *  the site at doubled coordinate window.lo_doubled + b. Products of basis
 *  monomials land on the xor of the masks with a sign; the sign table is
 *  filled once from the exact monomial product, so the dense path cannot
 *  drift from the symbolic one.
 *
 *  Immutable after construction and safe to share across threads. */
class WindowAlgebra {
  public:
    /** Throws MalformedInput when the window spans more than 10 sites (the
     *  sign table is quadratic in the basis size). */
    explicit WindowAlgebra(const Window& window);

    const Window& window() const { return window_; }
    int basis_size() const { return size_; }

    Monomial basis_monomial(int mask) const;
    /** Occupancy mask of a monomial. Throws SiteOutOfWindow. */
    int mask_of(const Monomial& m) const;

    /** e_i e_j = product_sign(i, j) * e_{i xor j}. */
    int product_sign(int i, int j) const {
        return signs_[static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) +
                      static_cast<std::size_t>(j)];
    }

    /** Coefficient vector of x in the mask basis. Throws SiteOutOfWindow. */
    Eigen::VectorXcd to_dense(const AlgebraElement& x) const;
    AlgebraElement from_dense(const Eigen::VectorXcd& v) const;

    Eigen::VectorXcd multiply(const Eigen::VectorXcd& a,
                              const Eigen::VectorXcd& b) const;

    /** Row vector phi_m = phi(e_m), so phi(x) = covector . to_dense(x). */
    Eigen::RowVectorXcd state_covector(const LatticeState& state) const;

  private:
    Window window_;
    int size_ = 0;
    std::vector<std::int8_t> signs_;
};

/** Precomputed reduced quadratic forms for the product-form screening
 *  residuals of two-cell partitions {P(t), 1 - P(t)} whose first cell is an
 *  affine image of the parameters,
 *
 *      to_dense(P(t)) = affine.col(0) + sum_i t_i affine.col(1 + i).
 *
 *  For each pair (a, b) the four corner products ab, a'b', ab', a'b are
 *  fixed, so each celled expectation phi(P x P) collapses to a quadratic
 *  form in (1, t) of size (1 + parameter_count()); the opposite cell follows
 *  from phi((1-P)x(1-P)) = phi(x) - phi(Px) - phi(xP) + phi(PxP). One
 *  evaluation therefore costs a handful of tiny forms instead of symbolic
 *  products, and agrees with the screening verdict whenever P(t) is an
 *  exact projection.
 *
 *  Immutable after construction and safe to share across threads. */
class ScreeningForms {
  public:
    ScreeningForms(const WindowAlgebra& algebra, const LatticeState& state,
                   const std::vector<ProjectionPair>& pairs,
                   const Eigen::MatrixXcd& affine);

    int parameter_count() const { return static_cast<int>(affine_.cols()) - 1; }
    std::size_t pair_count() const { return forms_.size(); }

    /** Largest per-cell residual over all pairs and both cells. */
    double worst_residual(const Eigen::VectorXd& t) const;

    /** All per-cell residuals in verdict order: pair-major, cell 0 then 1. */
    std::vector<CausalVerdict::Residual> residuals(const Eigen::VectorXd& t) const;

    /** One-norm of P(t)^2 - P(t). */
    double projection_defect(const Eigen::VectorXd& t) const;

    Eigen::VectorXcd cell_vector(const Eigen::VectorXd& t) const;

  private:
    struct CornerForm {
        Eigen::MatrixXd quad;    // (1+d)x(1+d), real part of phi(col_a x col_b)
        Eigen::RowVectorXd left;   // real part of phi(col_a x)
        Eigen::RowVectorXd right;  // real part of phi(x col_a)
        double plain = 0.0;        // real part of phi(x)
    };

    std::array<double, 2> celled_values(const CornerForm& f,
                                        const Eigen::VectorXd& lifted) const;

    const WindowAlgebra* algebra_;
    Eigen::MatrixXcd affine_;
    std::vector<std::array<CornerForm, 4>> forms_;  // per pair: pp, mm, pm, mp
};

}  // namespace isinglab

#endif  // ISINGLAB_KERNEL_HPP
