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

#ifndef ISINGLAB_CLASSICAL_HPP
#define ISINGLAB_CLASSICAL_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "isinglab/errors.hpp"
#include "isinglab/qcausal.hpp"
#include "isinglab/rep.hpp"

namespace isinglab {

/** Finite classical probability space: named atoms with weights that are
 *  nonnegative and sum to 1. Events are subsets of the atom index range. */
struct FiniteProbabilitySpace {
    std::vector<std::string> atoms;
    std::vector<double> weights;

    int size() const { return static_cast<int>(atoms.size()); }

    /** Throws MalformedInput unless atoms are distinct and nonempty and
     *  weights are nonnegative, match atoms in length, and sum to 1
     *  within 1e-12. */
    void validate() const;
};

/** Subset of a space's atoms, stored as sorted unique indices. */
struct Event {
    std::vector<int> members;
};

/** Event holding the given indices (deduplicated and sorted). */
Event make_event(std::vector<int> indices);

/** The whole sample space as an event. */
Event full_event(const FiniteProbabilitySpace& space);

Event event_and(const Event& x, const Event& y);
Event event_or(const Event& x, const Event& y);
Event event_not(const FiniteProbabilitySpace& space, const Event& x);

/** Whether every member of x is a member of y. */
bool event_subset(const Event& x, const Event& y);

/** p(X): the sum of atom weights over the event's members. */
double prob(const FiniteProbabilitySpace& space, const Event& x);

/** Bayes conditional p(X|Y) = p(X and Y) / p(Y).
 *  Throws ZeroConditioningEvent when p(Y) <= 1e-12. */
double cond(const FiniteProbabilitySpace& space, const Event& x,
            const Event& y);

/** Whether C is a common cause of the correlation between A and B:
 *  both C and its complement screen off A from B within tol, and both
 *  conditional probabilities of A and of B are strictly larger given C
 *  than given the complement (by more than tol).
 *  Throws ZeroConditioningEvent when C or its complement is null. */
bool reichenbach_check(const FiniteProbabilitySpace& space, const Event& a,
                       const Event& b, const Event& c, double tol);

/** Both sides of the covariance decomposition
 *      p(A and B) - p(A)p(B)
 *        = p(C)p(C')[p(A|C) - p(A|C')][p(B|C) - p(B|C')]
 *  with C' the complement of C. The two sides agree whenever C and C'
 *  both screen off A from B. Returns (lhs, rhs).
 *  Throws ZeroConditioningEvent when C or its complement is null. */
std::pair<double, double> reichenbach_identity(
    const FiniteProbabilitySpace& space, const Event& a, const Event& b,
    const Event& c);

/** Whether the partition screens off A from B in every cell of positive
 *  probability: p(A and B|C_k) = p(A|C_k)p(B|C_k) within tol. Cells of
 *  zero probability are skipped. */
bool ccs_check(const FiniteProbabilitySpace& space, const Event& a,
               const Event& b, const std::vector<Event>& partition,
               double tol);

/** ccs_check for every pair in the set against one shared partition. */
bool joint_ccs_check(const FiniteProbabilitySpace& space,
                     const std::vector<std::pair<Event, Event>>& pairs,
                     const std::vector<Event>& partition, double tol);

/** Two-wing measurement model: outcome events A_m, B_n, setting events
 *  a_m, b_n (each wing's settings partition the space), and a partition
 *  {C_k} screening the outcomes cell by cell. */
struct Def5Model {
    FiniteProbabilitySpace space;
    std::array<Event, 2> outcome_a;
    std::array<Event, 2> outcome_b;
    std::array<Event, 2> setting_a;
    std::array<Event, 2> setting_b;
    std::vector<Event> cells;
};

/** Per-cell conditional outcome probabilities: a[m] is the probability
 *  of outcome A_m given setting a_m and the cell, independent of the
 *  other wing's setting; likewise b[n]. */
struct CellConditionals {
    std::array<double, 2> a{0.5, 0.5};
    std::array<double, 2> b{0.5, 0.5};
};

/** Builds a Def5Model realizing the given per-cell conditionals exactly.
 *
 *  Atoms are tuples (setting pair, cell, left noise interval, right
 *  noise interval). The noise intervals subdivide [0,1] at the sorted
 *  breakpoints of the cell conditionals of one wing, so the outcome
 *  event "noise below the cell's threshold" has conditional probability
 *  exactly equal to the requested value; the two wings' noises are
 *  independent of each other and of the settings.
 *
 *  setting_weights is the joint setting distribution in row-major order
 *  (index 2m + n). Throws MalformedInput for non-probability inputs. */
Def5Model build_def5_model(const std::vector<double>& cell_weights,
                           const std::vector<CellConditionals>& conditionals,
                           const std::array<double, 4>& setting_weights);

/** Whether the model satisfies, for every setting pair and cell: the
 *  cell screens off the two outcomes given the settings, each outcome
 *  is independent of the distant setting, and the cells are independent
 *  of the setting pairs (no conspiracy). All within tol.
 *  Throws ZeroConditioningEvent when a conditioning event is null. */
bool def5_check(const Def5Model& model, double tol);

/** Six-term combination of setting-conditioned probabilities
 *      j(m,n) + j(m,n') + j(m',n) - j(m',n') - s(m,n) - t(m,n)
 *  where j(m,n) = p(A_m and B_n | a_m and b_n), s(m,n) = p(A_m | ...)
 *  and t(m,n) = p(B_n | ...). Always within [-1, 0] for models admitting
 *  a screening partition that is independent of the settings.
 *  Throws ZeroConditioningEvent when a setting pair is null. */
double classical_ch_value(const Def5Model& model,
                          const Assignment& assignment);

/** The same six-term combination from raw conditional probabilities:
 *  joints j_mn, j_mnp, j_mpn, j_mpnp and marginals p_a = p(A_m|...),
 *  p_b = p(B_n|...). */
double ch_combination(double j_mn, double j_mnp, double j_mpn, double j_mpnp,
                      double p_a, double p_b);

/** Singlet-state outcome probabilities at detector angle theta. */
struct EprProbabilities {
    double outcome_a = 0.0;
    double outcome_b = 0.0;
    double joint = 0.0;
};

/** Conditional probabilities for a spin pair in the singlet state with
 *  detectors at relative angle theta: each marginal is 1/2 and the
 *  up-up joint is sin^2(theta/2)/2. */
EprProbabilities epr_probabilities(double theta);

/** alpha*beta + alpha*beta' + alpha'*beta - alpha'*beta' - alpha - beta,
 *  which lies in [-1, 0] for arguments in [0, 1].
 *  Throws DomainError when an argument leaves [0, 1]. */
double arith_lemma_value(double alpha, double alpha_prime, double beta,
                         double beta_prime);

/** Classical probability space carried by a family of measurement
 *  contexts, together with the per-context setting events x^Q and
 *  per-projection outcome events X^Q and the verification defects of
 *  the four defining conditions. */
struct CensorshipResult {
    FiniteProbabilitySpace space;
    /** x^Q: one event per context, the union of that context's atoms. */
    std::vector<Event> setting_events;
    /** X^Q: outcome_events[q][j] corresponds to gamma[q][j]. */
    std::vector<std::vector<Event>> outcome_events;

    bool outcomes_inside_settings = false;
    bool settings_disjoint = false;
    /** max_Q |p(x^Q) - p0(Q)| */
    double setting_weight_defect = 0.0;
    /** max_{Q,X} |phi(X) - p(X^Q | x^Q)| */
    double conditional_defect = 0.0;

    bool verified(double tol) const {
        return outcomes_inside_settings && settings_disjoint &&
               setting_weight_defect <= tol && conditional_defect <= tol;
    }
};

/** Builds the classical probability space reproducing the quantum
 *  probabilities phi(X) = tr(rho X) as conditional probabilities
 *  p(X^Q | x^Q), one measurement context Q per projection family in
 *  gamma, each context selected with probability p0[Q].
 *
 *  Atoms are (context, projection) pairs with weight p0[Q] * phi(X).
 *  Throws MalformedGamma unless rho is a density matrix, p0 is strictly
 *  positive and sums to 1, and each family is a partition of unit into
 *  projections of the common dimension. */
CensorshipResult censorship_construct(
    const Matrix& rho, const std::vector<std::vector<Matrix>>& gamma,
    const std::vector<double>& p0);

}  // namespace isinglab

#endif  // ISINGLAB_CLASSICAL_HPP
