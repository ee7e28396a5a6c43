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

#include "isinglab/classical.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iterator>
#include <set>
#include <string>

namespace isinglab {

namespace {

constexpr double kNullEventWeight = 1e-12;
constexpr double kWeightSumTol = 1e-12;

/** Interval subdivision of [0, 1) at the sorted distinct values of cuts,
 *  dropping empty intervals. Every cut is the exact right endpoint of a
 *  prefix of the intervals, so prefix-length sums reproduce it. */
struct NoiseGrid {
    std::vector<double> edges;  // sorted, starts at 0, ends at 1

    int interval_count() const { return static_cast<int>(edges.size()) - 1; }
    double length(int i) const { return edges[i + 1] - edges[i]; }
    /** True when interval i lies entirely below the threshold. */
    bool below(int i, double threshold) const {
        return edges[i + 1] <= threshold;
    }
};

NoiseGrid make_noise_grid(const std::vector<double>& cuts) {
    std::set<double> edge_set{0.0, 1.0};
    for (double c : cuts) edge_set.insert(c);
    NoiseGrid grid;
    grid.edges.assign(edge_set.begin(), edge_set.end());
    return grid;
}

void require_probability_vector(const std::vector<double>& w,
                                const std::string& what) {
    if (w.empty()) throw MalformedInput(what + " is empty");
    double sum = 0.0;
    for (double v : w) {
        if (!(v >= 0.0)) throw MalformedInput(what + " has a negative entry");
        sum += v;
    }
    if (std::abs(sum - 1.0) > kWeightSumTol)
        throw MalformedInput(what + " does not sum to 1");
}

void require_unit_interval(double v, const std::string& what) {
    if (!(v >= 0.0 && v <= 1.0))
        throw MalformedInput(what + " lies outside [0, 1]");
}

}  // namespace

void FiniteProbabilitySpace::validate() const {
    if (atoms.empty()) throw MalformedInput("space has no atoms");
    if (weights.size() != atoms.size())
        throw MalformedInput("weights and atoms differ in length");
    double sum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw MalformedInput("negative atom weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > kWeightSumTol)
        throw MalformedInput("atom weights do not sum to 1");
    std::vector<std::string> sorted = atoms;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw MalformedInput("duplicate atom names");
}

Event make_event(std::vector<int> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    return Event{std::move(indices)};
}

Event full_event(const FiniteProbabilitySpace& space) {
    Event e;
    e.members.resize(space.size());
    for (int i = 0; i < space.size(); ++i) e.members[i] = i;
    return e;
}

Event event_and(const Event& x, const Event& y) {
    Event out;
    std::set_intersection(x.members.begin(), x.members.end(),
                          y.members.begin(), y.members.end(),
                          std::back_inserter(out.members));
    return out;
}

Event event_or(const Event& x, const Event& y) {
    Event out;
    std::set_union(x.members.begin(), x.members.end(), y.members.begin(),
                   y.members.end(), std::back_inserter(out.members));
    return out;
}

Event event_not(const FiniteProbabilitySpace& space, const Event& x) {
    Event out;
    std::size_t next = 0;
    for (int i = 0; i < space.size(); ++i) {
        if (next < x.members.size() && x.members[next] == i) {
            ++next;
        } else {
            out.members.push_back(i);
        }
    }
    return out;
}

bool event_subset(const Event& x, const Event& y) {
    return std::includes(y.members.begin(), y.members.end(),
                         x.members.begin(), x.members.end());
}

double prob(const FiniteProbabilitySpace& space, const Event& x) {
    double sum = 0.0;
    for (int i : x.members) {
        if (i < 0 || i >= space.size())
            throw MalformedInput("event member outside the atom range");
        sum += space.weights[i];
    }
    return sum;
}

double cond(const FiniteProbabilitySpace& space, const Event& x,
            const Event& y) {
    const double py = prob(space, y);
    if (py <= kNullEventWeight)
        throw ZeroConditioningEvent("conditioning event has zero probability");
    return prob(space, event_and(x, y)) / py;
}

bool reichenbach_check(const FiniteProbabilitySpace& space, const Event& a,
                       const Event& b, const Event& c, double tol) {
    const Event cp = event_not(space, c);
    const Event ab = event_and(a, b);
    const double screen_c =
        std::abs(cond(space, ab, c) - cond(space, a, c) * cond(space, b, c));
    const double screen_cp =
        std::abs(cond(space, ab, cp) - cond(space, a, cp) * cond(space, b, cp));
    const bool relevant_a = cond(space, a, c) - cond(space, a, cp) > tol;
    const bool relevant_b = cond(space, b, c) - cond(space, b, cp) > tol;
    return screen_c <= tol && screen_cp <= tol && relevant_a && relevant_b;
}

std::pair<double, double> reichenbach_identity(
    const FiniteProbabilitySpace& space, const Event& a, const Event& b,
    const Event& c) {
    const Event cp = event_not(space, c);
    const double lhs =
        prob(space, event_and(a, b)) - prob(space, a) * prob(space, b);
    const double rhs = prob(space, c) * prob(space, cp) *
                       (cond(space, a, c) - cond(space, a, cp)) *
                       (cond(space, b, c) - cond(space, b, cp));
    return {lhs, rhs};
}

bool ccs_check(const FiniteProbabilitySpace& space, const Event& a,
               const Event& b, const std::vector<Event>& partition,
               double tol) {
    const Event ab = event_and(a, b);
    for (const Event& cell : partition) {
        if (prob(space, cell) <= kNullEventWeight) continue;
        const double defect = std::abs(cond(space, ab, cell) -
                                       cond(space, a, cell) *
                                           cond(space, b, cell));
        if (defect > tol) return false;
    }
    return true;
}

bool joint_ccs_check(const FiniteProbabilitySpace& space,
                     const std::vector<std::pair<Event, Event>>& pairs,
                     const std::vector<Event>& partition, double tol) {
    for (const auto& [a, b] : pairs) {
        if (!ccs_check(space, a, b, partition, tol)) return false;
    }
    return true;
}

Def5Model build_def5_model(const std::vector<double>& cell_weights,
                           const std::vector<CellConditionals>& conditionals,
                           const std::array<double, 4>& setting_weights) {
    require_probability_vector(cell_weights, "cell weights");
    require_probability_vector(
        std::vector<double>(setting_weights.begin(), setting_weights.end()),
        "setting weights");
    if (conditionals.size() != cell_weights.size())
        throw MalformedInput("one conditional block per cell is required");
    std::vector<double> cuts_a, cuts_b;
    for (const CellConditionals& cc : conditionals) {
        for (int m = 0; m < 2; ++m) {
            require_unit_interval(cc.a[m], "left outcome conditional");
            require_unit_interval(cc.b[m], "right outcome conditional");
            cuts_a.push_back(cc.a[m]);
            cuts_b.push_back(cc.b[m]);
        }
    }
    const NoiseGrid grid_a = make_noise_grid(cuts_a);
    const NoiseGrid grid_b = make_noise_grid(cuts_b);
    const int cells = static_cast<int>(cell_weights.size());

    Def5Model model;
    model.cells.resize(cells);
    for (int m = 0; m < 2; ++m) {
        for (int n = 0; n < 2; ++n) {
            for (int k = 0; k < cells; ++k) {
                for (int ia = 0; ia < grid_a.interval_count(); ++ia) {
                    for (int ib = 0; ib < grid_b.interval_count(); ++ib) {
                        const int atom =
                            static_cast<int>(model.space.atoms.size());
                        model.space.atoms.push_back(
                            "m" + std::to_string(m) + "n" + std::to_string(n) +
                            " k" + std::to_string(k) + " u" +
                            std::to_string(ia) + "," + std::to_string(ib));
                        model.space.weights.push_back(
                            setting_weights[2 * m + n] * cell_weights[k] *
                            grid_a.length(ia) * grid_b.length(ib));
                        model.setting_a[m].members.push_back(atom);
                        model.setting_b[n].members.push_back(atom);
                        model.cells[k].members.push_back(atom);
                        if (grid_a.below(ia, conditionals[k].a[m]))
                            model.outcome_a[m].members.push_back(atom);
                        if (grid_b.below(ib, conditionals[k].b[n]))
                            model.outcome_b[n].members.push_back(atom);
                    }
                }
            }
        }
    }
    for (std::array<Event, 2>* wing :
         {&model.setting_a, &model.setting_b, &model.outcome_a,
          &model.outcome_b}) {
        for (Event& e : *wing) e = make_event(std::move(e.members));
    }
    for (Event& e : model.cells) e = make_event(std::move(e.members));
    model.space.validate();
    return model;
}

bool def5_check(const Def5Model& model, double tol) {
    const FiniteProbabilitySpace& sp = model.space;
    const int cells = static_cast<int>(model.cells.size());
    for (int m = 0; m < 2; ++m) {
        for (int n = 0; n < 2; ++n) {
            const Event settings =
                event_and(model.setting_a[m], model.setting_b[n]);
            const Event swapped_a =
                event_and(model.setting_a[1 - m], model.setting_b[n]);
            const Event swapped_b =
                event_and(model.setting_a[m], model.setting_b[1 - n]);
            for (int k = 0; k < cells; ++k) {
                const Event base = event_and(settings, model.cells[k]);
                const double pa = cond(sp, model.outcome_a[m], base);
                const double pb = cond(sp, model.outcome_b[n], base);
                const double pab = cond(
                    sp, event_and(model.outcome_a[m], model.outcome_b[n]),
                    base);
                if (std::abs(pab - pa * pb) > tol) return false;
                const double pa_far = cond(sp, model.outcome_a[m],
                                           event_and(swapped_b,
                                                     model.cells[k]));
                const double pb_far = cond(sp, model.outcome_b[n],
                                           event_and(swapped_a,
                                                     model.cells[k]));
                if (std::abs(pa - pa_far) > tol) return false;
                if (std::abs(pb - pb_far) > tol) return false;
                const double joint3 = prob(sp, base);
                const double split =
                    prob(sp, settings) * prob(sp, model.cells[k]);
                if (std::abs(joint3 - split) > tol) return false;
            }
        }
    }
    return true;
}

double ch_combination(double j_mn, double j_mnp, double j_mpn, double j_mpnp,
                      double p_a, double p_b) {
    return j_mn + j_mnp + j_mpn - j_mpnp - p_a - p_b;
}

double classical_ch_value(const Def5Model& model,
                          const Assignment& assignment) {
    const FiniteProbabilitySpace& sp = model.space;
    const auto joint = [&](int m, int n) {
        const Event settings = event_and(model.setting_a[m],
                                         model.setting_b[n]);
        return cond(sp, event_and(model.outcome_a[m], model.outcome_b[n]),
                    settings);
    };
    const Event base = event_and(model.setting_a[assignment.m],
                                 model.setting_b[assignment.n]);
    return ch_combination(joint(assignment.m, assignment.n),
                          joint(assignment.m, assignment.np),
                          joint(assignment.mp, assignment.n),
                          joint(assignment.mp, assignment.np),
                          cond(sp, model.outcome_a[assignment.m], base),
                          cond(sp, model.outcome_b[assignment.n], base));
}

EprProbabilities epr_probabilities(double theta) {
    const double s = std::sin(theta / 2.0);
    return EprProbabilities{0.5, 0.5, 0.5 * s * s};
}

double arith_lemma_value(double alpha, double alpha_prime, double beta,
                         double beta_prime) {
    for (double v : {alpha, alpha_prime, beta, beta_prime}) {
        if (!(v >= 0.0 && v <= 1.0))
            throw DomainError("arguments must lie in [0, 1]");
    }
    return alpha * beta + alpha * beta_prime + alpha_prime * beta -
           alpha_prime * beta_prime - alpha - beta;
}

}  // namespace isinglab
