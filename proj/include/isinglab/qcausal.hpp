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

#ifndef ISINGLAB_QCAUSAL_HPP
#define ISINGLAB_QCAUSAL_HPP

#include <cstddef>
#include <vector>

#include "isinglab/net.hpp"

namespace isinglab {

/** Default closeness tolerance for verdicts. */
inline constexpr double kVerdictTol = 1e-10;

/** A finite family of mutually orthogonal projections summing to one.
 *  Construction does not validate; validate() is called by every operation
 *  that relies on the partition structure. */
struct PartitionOfUnit {
    std::vector<AlgebraElement> members;

    /** Throws MalformedPartition unless every member is a projection, the
     *  members are pairwise orthogonal and they sum to the identity, all
     *  within tol (in one_norm). */
    void validate(double tol = kVerdictTol) const;

    std::size_t size() const { return members.size(); }
};

/** One commuting pair of projections whose correlation is under study. */
struct ProjectionPair {
    AlgebraElement a;
    AlgebraElement b;
};

/** phi(ab) - phi(a)phi(b). Requires [a, b] = 0 within 1e-10, else throws
 *  NoncommutingPair; the result is real up to roundoff. */
double correlation(const LatticeState& state, const AlgebraElement& a,
                   const AlgebraElement& b);

/** True iff the product-form defect
 *  |phi(ab)phi(a^b^) - phi(ab^)phi(a^b)| exceeds tol (^ = complement).
 *  By the marginal identities this defect equals |correlation|, so the
 *  check agrees with correlation != 0. */
bool product_form_check(const LatticeState& state, const AlgebraElement& a,
                        const AlgebraElement& b, double tol = kVerdictTol);

/** The trace-compatible conditional expectation onto the partition's
 *  relative commutant: x maps to sum_k C_k x C_k. */
AlgebraElement conditional_expectation(const PartitionOfUnit& partition,
                                       const AlgebraElement& x);

/** The state conditioned on cell k: phi(C_k x C_k) / phi(C_k). Throws
 *  ZeroWeightCell when the cell weight is at most 1e-12. */
Complex conditional_state(const LatticeState& state, const PartitionOfUnit& partition,
                          std::size_t k, const AlgebraElement& x);

/** Outcome of a common-cause-system verification. */
struct CausalVerdict {
    struct Residual {
        std::size_t pair_index = 0;
        std::size_t cell_index = 0;
        double value = 0.0;
    };
    std::vector<Residual> residuals;
    bool satisfied = false;  // all residuals <= tol
    bool commuting = false;  // every cell commutes with every tested projection
    bool trivial = false;    // some cell is dominated by a tested projection or its complement
    double tol = kVerdictTol;

    double worst_residual() const;
};

/** Verifies the screening-off factorization of one pair across all cells:
 *  the conditioned product expectation factorizes cell by cell (in the
 *  unnormalized form, which stays valid on cells of zero weight). */
CausalVerdict verify_ccs(const LatticeState& state, const AlgebraElement& a,
                         const AlgebraElement& b, const PartitionOfUnit& partition,
                         double tol = kVerdictTol);

/** Joint verdict across several pairs with one shared partition. */
CausalVerdict verify_joint_ccs(const LatticeState& state,
                               const std::vector<ProjectionPair>& pairs,
                               const PartitionOfUnit& partition,
                               double tol = kVerdictTol);

/** Which indices play (m, n, m', n') in the inequality combination. */
struct Assignment {
    int m = 0;
    int n = 0;
    int mp = 1;
    int np = 1;
};

inline constexpr std::array<Assignment, 4> kAllAssignments{
    Assignment{0, 0, 1, 1}, Assignment{0, 1, 1, 0}, Assignment{1, 0, 0, 1},
    Assignment{1, 1, 0, 0}};

/** Clauser-Horne combination
 *  phi(A_m B_n + A_m B_n' + A_m' B_n - A_m' B_n' - A_m - B_n).
 *  Projections on the two sides must commute pairwise. */
double ch_value(const LatticeState& state, const std::array<AlgebraElement, 2>& a,
                const std::array<AlgebraElement, 2>& b, const Assignment& assignment);

/** Clauser-Horne-Shimony-Holt combination phi(X1(Y1+Y2) + X2(Y1-Y2)) for
 *  the dichotomic observables X_m = 2A_m - 1, Y_n = 2B_n - 1. Equals
 *  4 * ch_value(assignment (1,1,2,2)) + 2 on the same data. */
double chsh_value(const LatticeState& state, const std::array<AlgebraElement, 2>& a,
                  const std::array<AlgebraElement, 2>& b);

/** The Clauser-Horne combination evaluated in the conditionally expected
 *  state phi o E_c. */
double ch_conditioned_value(const LatticeState& state,
                            const std::array<AlgebraElement, 2>& a,
                            const std::array<AlgebraElement, 2>& b,
                            const Assignment& assignment,
                            const PartitionOfUnit& partition);

/** Checks that conditioning on any cell leaves each side's marginal the sum
 *  of the joint outcomes (an exact linearity identity; failures indicate an
 *  implementation or input defect). */
bool no_signalling_check(const LatticeState& state, const std::vector<ProjectionPair>& pairs,
                         const PartitionOfUnit& partition, double tol = kVerdictTol);

}  // namespace isinglab

#endif  // ISINGLAB_QCAUSAL_HPP
