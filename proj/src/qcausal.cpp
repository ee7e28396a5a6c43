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

#include "isinglab/qcausal.hpp"

#include <algorithm>
#include <cmath>

#include "isinglab/errors.hpp"

namespace isinglab {

namespace {

AlgebraElement complement(const AlgebraElement& p) {
    return AlgebraElement::identity() - p;
}

double real_expectation(const LatticeState& state, const AlgebraElement& x) {
    return evaluate(state, x).real();
}

AlgebraElement project_onto_cells(const PartitionOfUnit& partition, const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& c : partition.members) out += mul(mul(c, x), c);
    return out;
}

}  // namespace

void PartitionOfUnit::validate(double tol) const {
    if (members.empty()) throw MalformedPartition("partition has no members");
    AlgebraElement sum;
    for (std::size_t k = 0; k < members.size(); ++k) {
        if (!is_projection(members[k], tol)) {
            throw MalformedPartition("partition member " + std::to_string(k) +
                                     " is not a projection");
        }
        for (std::size_t j = k + 1; j < members.size(); ++j) {
            if (one_norm(mul(members[k], members[j])) > tol) {
                throw MalformedPartition("partition members " + std::to_string(k) + " and " +
                                         std::to_string(j) + " are not orthogonal");
            }
        }
        sum += members[k];
    }
    if (one_norm(sum - AlgebraElement::identity()) > tol) {
        throw MalformedPartition("partition members do not sum to the identity");
    }
}

double correlation(const LatticeState& state, const AlgebraElement& a,
                   const AlgebraElement& b) {
    if (one_norm(commutator(a, b)) > 1e-10) {
        throw NoncommutingPair("correlation requires a commuting pair");
    }
    Complex joint = evaluate(state, mul(a, b));
    Complex left = evaluate(state, a);
    Complex right = evaluate(state, b);
    return (joint - left * right).real();
}

bool product_form_check(const LatticeState& state, const AlgebraElement& a,
                        const AlgebraElement& b, double tol) {
    if (one_norm(commutator(a, b)) > 1e-10) {
        throw NoncommutingPair("product form check requires a commuting pair");
    }
    const AlgebraElement ac = complement(a);
    const AlgebraElement bc = complement(b);
    const double defect = real_expectation(state, mul(a, b)) *
                              real_expectation(state, mul(ac, bc)) -
                          real_expectation(state, mul(a, bc)) *
                              real_expectation(state, mul(ac, b));
    return std::abs(defect) > tol;
}

AlgebraElement conditional_expectation(const PartitionOfUnit& partition,
                                       const AlgebraElement& x) {
    partition.validate();
    return project_onto_cells(partition, x);
}

Complex conditional_state(const LatticeState& state, const PartitionOfUnit& partition,
                          std::size_t k, const AlgebraElement& x) {
    partition.validate();
    if (k >= partition.size()) throw MalformedInput("cell index out of range");
    const AlgebraElement& c = partition.members[k];
    Complex weight = evaluate(state, c);
    if (!(std::abs(weight) > 1e-12)) {
        throw ZeroWeightCell("conditional state on a cell of zero weight");
    }
    return evaluate(state, mul(mul(c, x), c)) / weight;
}

double CausalVerdict::worst_residual() const {
    double worst = 0.0;
    for (const auto& r : residuals) worst = std::max(worst, r.value);
    return worst;
}

namespace {

void append_ccs_residuals(const LatticeState& state, const AlgebraElement& a,
                          const AlgebraElement& b, const PartitionOfUnit& partition,
                          std::size_t pair_index, CausalVerdict* verdict) {
    const AlgebraElement ac = complement(a);
    const AlgebraElement bc = complement(b);
    for (std::size_t k = 0; k < partition.size(); ++k) {
        const AlgebraElement& cell = partition.members[k];
        // Conditioned factorization in unnormalized form: the squared cell
        // weight cancels between the two products of the difference, so the
        // residual stays meaningful even on cells of zero weight.
        auto celled = [&](const AlgebraElement& x) {
            return real_expectation(state, project_onto_cells(partition, mul(x, cell)));
        };
        double pp = celled(mul(a, b));
        double mm = celled(mul(ac, bc));
        double pm = celled(mul(a, bc));
        double mp = celled(mul(ac, b));
        verdict->residuals.push_back(
            {pair_index, k, std::abs(pp * mm - pm * mp)});
    }
}

bool cell_commutes_with(const PartitionOfUnit& partition, const AlgebraElement& x) {
    return std::all_of(partition.members.begin(), partition.members.end(),
                       [&](const AlgebraElement& c) {
                           return one_norm(commutator(c, x)) <= 1e-10;
                       });
}

bool cell_dominated_by(const PartitionOfUnit& partition, const AlgebraElement& x,
                       double tol) {
    return std::any_of(partition.members.begin(), partition.members.end(),
                       [&](const AlgebraElement& c) {
                           return one_norm(mul(x, c) - c) <= tol;
                       });
}

}  // namespace

CausalVerdict verify_ccs(const LatticeState& state, const AlgebraElement& a,
                         const AlgebraElement& b, const PartitionOfUnit& partition,
                         double tol) {
    return verify_joint_ccs(state, {ProjectionPair{a, b}}, partition, tol);
}

CausalVerdict verify_joint_ccs(const LatticeState& state,
                               const std::vector<ProjectionPair>& pairs,
                               const PartitionOfUnit& partition, double tol) {
    partition.validate();
    for (const auto& pair : pairs) {
        if (one_norm(commutator(pair.a, pair.b)) > 1e-10) {
            throw NoncommutingPair("screening verdicts require commuting pairs");
        }
    }
    CausalVerdict verdict;
    verdict.tol = tol;
    verdict.commuting = true;
    verdict.trivial = false;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        append_ccs_residuals(state, pairs[p].a, pairs[p].b, partition, p, &verdict);
        for (const AlgebraElement& side : {pairs[p].a, pairs[p].b}) {
            if (!cell_commutes_with(partition, side)) verdict.commuting = false;
            if (cell_dominated_by(partition, side, tol) ||
                cell_dominated_by(partition, complement(side), tol)) {
                verdict.trivial = true;
            }
        }
    }
    verdict.satisfied = verdict.worst_residual() <= tol;
    return verdict;
}

namespace {

AlgebraElement ch_combination(const std::array<AlgebraElement, 2>& a,
                              const std::array<AlgebraElement, 2>& b,
                              const Assignment& s) {
    const AlgebraElement& am = a[static_cast<std::size_t>(s.m)];
    const AlgebraElement& amp = a[static_cast<std::size_t>(s.mp)];
    const AlgebraElement& bn = b[static_cast<std::size_t>(s.n)];
    const AlgebraElement& bnp = b[static_cast<std::size_t>(s.np)];
    return mul(am, bn) + mul(am, bnp) + mul(amp, bn) - mul(amp, bnp) - am - bn;
}

void require_commuting_grid(const std::array<AlgebraElement, 2>& a,
                            const std::array<AlgebraElement, 2>& b) {
    for (const auto& x : a) {
        for (const auto& y : b) {
            if (one_norm(commutator(x, y)) > 1e-10) {
                throw NoncommutingPair("the two sides must commute pairwise");
            }
        }
    }
}

}  // namespace

double ch_value(const LatticeState& state, const std::array<AlgebraElement, 2>& a,
                const std::array<AlgebraElement, 2>& b, const Assignment& assignment) {
    require_commuting_grid(a, b);
    return real_expectation(state, ch_combination(a, b, assignment));
}

double chsh_value(const LatticeState& state, const std::array<AlgebraElement, 2>& a,
                  const std::array<AlgebraElement, 2>& b) {
    require_commuting_grid(a, b);
    AlgebraElement one = AlgebraElement::identity();
    std::array<AlgebraElement, 2> x{2.0 * a[0] - one, 2.0 * a[1] - one};
    std::array<AlgebraElement, 2> y{2.0 * b[0] - one, 2.0 * b[1] - one};
    AlgebraElement combo = mul(x[0], y[0] + y[1]) + mul(x[1], y[0] - y[1]);
    return real_expectation(state, combo);
}

double ch_conditioned_value(const LatticeState& state,
                            const std::array<AlgebraElement, 2>& a,
                            const std::array<AlgebraElement, 2>& b,
                            const Assignment& assignment,
                            const PartitionOfUnit& partition) {
    require_commuting_grid(a, b);
    partition.validate();
    return real_expectation(
        state, conditional_expectation(partition, ch_combination(a, b, assignment)));
}

bool no_signalling_check(const LatticeState& state, const std::vector<ProjectionPair>& pairs,
                         const PartitionOfUnit& partition, double tol) {
    partition.validate();
    for (const auto& pair : pairs) {
        const AlgebraElement bc = complement(pair.b);
        const AlgebraElement ac = complement(pair.a);
        for (std::size_t k = 0; k < partition.size(); ++k) {
            if (std::abs(evaluate(state, partition.members[k])) <= 1e-12) continue;
            auto phk = [&](const AlgebraElement& x) {
                return conditional_state(state, partition, k, x).real();
            };
            double left = phk(pair.a) - phk(mul(pair.a, pair.b)) - phk(mul(pair.a, bc));
            double right = phk(pair.b) - phk(mul(pair.a, pair.b)) - phk(mul(ac, pair.b));
            if (std::abs(left) > tol || std::abs(right) > tol) return false;
        }
    }
    return true;
}

}  // namespace isinglab
