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

#include "isinglab/net.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <utility>

#include "isinglab/errors.hpp"
#include "isinglab/rep.hpp"

namespace isinglab {

namespace {

constexpr double kUnitTol = 1e-9;
constexpr Complex kImag{0.0, 1.0};

Monomial monomial_of_doubled(std::initializer_list<int> doubled) {
    Monomial m;
    for (int d : doubled) m.sites.push_back(Site{d});
    return m;
}

}  // namespace

MinimalDoubleCone MinimalDoubleCone::at(int t2, int i2) {
    if (((t2 - i2) % 2 + 2) % 2 != 0) {
        throw MalformedInput("cone coordinates must have equal parity");
    }
    return MinimalDoubleCone{t2, i2};
}

MinimalDoubleCone MinimalDoubleCone::slice_cone(Site s) {
    return MinimalDoubleCone{s.is_integer() ? 0 : -1, s.doubled};
}

Region::Region(std::vector<MinimalDoubleCone> cones) : cones_(std::move(cones)) {
    std::sort(cones_.begin(), cones_.end());
    cones_.erase(std::unique(cones_.begin(), cones_.end()), cones_.end());
    if (cones_.empty()) throw MalformedInput("region must contain at least one cone");
}

Region Region::slice_interval(Site lo, Site hi) {
    if (lo > hi) throw MalformedInput("empty site interval");
    std::vector<MinimalDoubleCone> cones;
    for (int d = lo.doubled; d <= hi.doubled; ++d) {
        cones.push_back(MinimalDoubleCone::slice_cone(Site{d}));
    }
    return Region(std::move(cones));
}

Region Region::single_site(Site s) { return slice_interval(s, s); }

Region Region::left_observer() {
    return Region({MinimalDoubleCone{0, -2}, MinimalDoubleCone{1, -1}});
}

Region Region::right_observer() {
    return Region({MinimalDoubleCone{1, 1}, MinimalDoubleCone{0, 2}});
}

Region Region::common_past_interval() {
    return slice_interval(Site::half(-1), Site::half(0));
}

std::vector<Monomial> local_basis(const Region& region) {
    if (region == Region::left_observer()) {
        return {Monomial::identity(), monomial_of_doubled({-2}),
                monomial_of_doubled({-2, -1, 0}), monomial_of_doubled({-1, 0})};
    }
    if (region == Region::right_observer()) {
        return {Monomial::identity(), monomial_of_doubled({2}),
                monomial_of_doubled({0, 1, 2}), monomial_of_doubled({0, 1})};
    }
    // A slice interval: every cone is the slice cone of its site and the
    // sites form a contiguous half-step run.
    const auto& cones = region.cones();
    std::vector<int> doubled;
    for (const auto& c : cones) {
        if (c != MinimalDoubleCone::slice_cone(Site{c.i2})) {
            throw UnsupportedRegion("region is not a catalogued family");
        }
        doubled.push_back(c.i2);
    }
    std::sort(doubled.begin(), doubled.end());
    for (std::size_t k = 1; k < doubled.size(); ++k) {
        if (doubled[k] != doubled[k - 1] + 1) {
            throw UnsupportedRegion("slice sites are not contiguous");
        }
    }
    std::size_t n = doubled.size();
    if (n > 24) throw UnsupportedRegion("interval too wide for a dense basis");
    std::vector<Monomial> basis;
    basis.reserve(1ULL << n);
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        Monomial m;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (1ULL << j)) m.sites.push_back(Site{doubled[j]});
        }
        basis.push_back(std::move(m));
    }
    return basis;
}

ObservableTriple observable_triple_left() {
    ObservableTriple t;
    t.component[0] = AlgebraElement::monomial(monomial_of_doubled({-2}));
    t.component[1] = AlgebraElement::monomial(monomial_of_doubled({-2, -1, 0}));
    t.component[2] = AlgebraElement::monomial(monomial_of_doubled({-1, 0}), kImag);
    return t;
}

ObservableTriple observable_triple_right() {
    ObservableTriple t;
    t.component[0] = AlgebraElement::monomial(monomial_of_doubled({2}));
    t.component[1] = AlgebraElement::monomial(monomial_of_doubled({0, 1, 2}), -1.0);
    t.component[2] = AlgebraElement::monomial(monomial_of_doubled({0, 1}), kImag);
    return t;
}

AlgebraElement spin_projection(const ObservableTriple& triple, const Direction& a) {
    double norm = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
    if (std::abs(norm - 1.0) > kUnitTol) {
        throw NotUnitVector("direction must be a unit 3-vector");
    }
    AlgebraElement x = AlgebraElement::identity();
    for (int k = 0; k < 3; ++k) x += a[k] * triple.component[k];
    x *= 0.5;
    return x;
}

AlgebraElement spin_projection_left(const Direction& a) {
    return spin_projection(observable_triple_left(), a);
}

AlgebraElement spin_projection_right(const Direction& b) {
    return spin_projection(observable_triple_right(), b);
}

LatticeState state_family(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw LambdaOutOfRange("state parameter must lie in [0, 1]");
    }
    AlgebraElement rho = AlgebraElement::identity();
    rho.add_term(monomial_of_doubled({-2, -1, 1, 2}), lambda);
    rho.add_term(monomial_of_doubled({-2, 2}), -lambda);
    rho.add_term(monomial_of_doubled({-1, 1}), lambda);
    return LatticeState{std::move(rho)};
}

LatticeState state_from_density(const AlgebraElement& rho) {
    if (std::abs(trace(rho) - 1.0) > 1e-12) {
        throw MalformedInput("density element must have unit trace");
    }
    if (!is_selfadjoint(rho, 1e-12)) {
        throw MalformedInput("density element must be self-adjoint");
    }
    Window w = Window::covering(rho);
    if (min_eigenvalue(rep(rho, w)) < -1e-10) {
        throw MalformedInput("density element must be positive");
    }
    return LatticeState{rho};
}

Complex evaluate(const LatticeState& state, const AlgebraElement& x) {
    return trace(mul(state.rho, x));
}

AlgebraElement time_step(const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& [m, c] : x.terms()) {
        AlgebraElement image = AlgebraElement::monomial(Monomial::identity(), c);
        for (Site s : m.sites) {
            if (s.is_integer()) {
                throw UnspecifiedDynamics("one-step dynamics is defined on half-integer sites only");
            }
            image = mul(image, AlgebraElement::monomial(
                                   monomial_of_doubled({s.doubled - 1, s.doubled, s.doubled + 1})));
        }
        out += image;
    }
    return out;
}

std::vector<AlgebraElement> commutant_in(const std::vector<AlgebraElement>& generators,
                                         const Region& ambient) {
    const std::vector<Monomial> basis = local_basis(ambient);
    std::map<Monomial, std::size_t> basis_index;
    for (std::size_t k = 0; k < basis.size(); ++k) basis_index[basis[k]] = k;

    for (const auto& g : generators) {
        for (const auto& [m, c] : g.terms()) {
            if (!basis_index.count(m)) {
                throw MalformedInput("generator is not supported in the ambient region");
            }
        }
    }

    // Linear constraints: for each generator g and each monomial appearing
    // in some [basis_k, g], one homogeneous equation over the coefficients.
    const std::size_t n = basis.size();
    std::map<std::pair<std::size_t, Monomial>, std::size_t> row_index;
    std::vector<std::vector<Complex>> rows;
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
        for (std::size_t k = 0; k < n; ++k) {
            AlgebraElement com = commutator(AlgebraElement::monomial(basis[k]), generators[gi]);
            for (const auto& [m, c] : com.terms()) {
                auto key = std::make_pair(gi, m);
                auto it = row_index.find(key);
                if (it == row_index.end()) {
                    it = row_index.emplace(key, rows.size()).first;
                    rows.emplace_back(n, Complex{0.0});
                }
                rows[it->second][k] = c;
            }
        }
    }

    // Reduced row echelon form with partial pivoting; entries are small
    // integer combinations, so a fixed pivot threshold is safe.
    constexpr double kPivotTol = 1e-9;
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t best = r;
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (std::abs(rows[i][col]) > std::abs(rows[best][col])) best = i;
        }
        if (std::abs(rows[best][col]) <= kPivotTol) continue;
        std::swap(rows[r], rows[best]);
        Complex inv = 1.0 / rows[r][col];
        for (std::size_t j = col; j < n; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            Complex factor = rows[i][col];
            if (std::abs(factor) <= kPivotTol) continue;
            for (std::size_t j = col; j < n; ++j) rows[i][j] -= factor * rows[r][j];
        }
        pivot_col_of_row.push_back(col);
        ++r;
    }

    std::vector<bool> is_pivot(n, false);
    for (std::size_t col : pivot_col_of_row) is_pivot[col] = true;

    std::vector<AlgebraElement> kernel;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        AlgebraElement v = AlgebraElement::monomial(basis[free_col]);
        for (std::size_t row = 0; row < pivot_col_of_row.size(); ++row) {
            Complex c = rows[row][free_col];
            if (std::abs(c) > kPivotTol) v.add_term(basis[pivot_col_of_row[row]], -c);
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

bool in_backward_cone(MinimalDoubleCone c, MinimalDoubleCone d) {
    return c.t2 <= d.t2 && std::abs(c.i2 - d.i2) <= d.t2 - c.t2;
}

bool in_past(PastKind kind, const Region& a, const Region& b, MinimalDoubleCone c) {
    auto in_any = [&](const Region& r) {
        return std::any_of(r.cones().begin(), r.cones().end(),
                           [&](MinimalDoubleCone d) { return in_backward_cone(c, d); });
    };
    auto in_all = [&](const Region& r) {
        return std::all_of(r.cones().begin(), r.cones().end(),
                           [&](MinimalDoubleCone d) { return in_backward_cone(c, d); });
    };
    switch (kind) {
        case PastKind::Weak:
            return in_any(a) || in_any(b);
        case PastKind::Common:
            return in_any(a) && in_any(b);
        case PastKind::Strong:
            return in_all(a) && in_all(b);
    }
    return false;
}

bool in_past(PastKind kind, const Region& a, const Region& b, const Region& probe) {
    return std::all_of(probe.cones().begin(), probe.cones().end(),
                       [&](MinimalDoubleCone c) { return in_past(kind, a, b, c); });
}

}  // namespace isinglab
