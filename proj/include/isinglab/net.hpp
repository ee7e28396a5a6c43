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

#ifndef ISINGLAB_NET_HPP
#define ISINGLAB_NET_HPP

#include <array>
#include <vector>

#include "isinglab/algebra.hpp"

namespace isinglab {

/** A minimal double cone of the two-dimensional lattice spacetime, by the
 *  doubled coordinates of its center (t2 = 2t, i2 = 2i). Time and space
 *  coordinates of a lattice cone have equal parity. */
struct MinimalDoubleCone {
    int t2 = 0;
    int i2 = 0;

    /** Validates the parity constraint. */
    static MinimalDoubleCone at(int t2, int i2);
    /** The time-slice cone owning site s: t = 0 over integer sites and
     *  t = -1/2 over half-integer sites, forming a thickened time slice. */
    static MinimalDoubleCone slice_cone(Site s);

    auto operator<=>(const MinimalDoubleCone&) const = default;
};

/** A finite union of minimal double cones (kept sorted and distinct). */
class Region {
  public:
    Region() = default;
    explicit Region(std::vector<MinimalDoubleCone> cones);

    /** Cones of every site from lo to hi (inclusive, half-steps included)
     *  on the thickened time slice. */
    static Region slice_interval(Site lo, Site hi);
    static Region single_site(Site s);

    /** Left observer region: the site -1 slice cone joined with the cone
     *  one half-step up in time at -1/2. */
    static Region left_observer();
    /** Right observer region: the half-step-up cone at 1/2 joined with the
     *  site 1 slice cone. */
    static Region right_observer();
    /** The slice interval from -1/2 to 1/2 lying in the common past of the
     *  two observer regions. */
    static Region common_past_interval();

    const std::vector<MinimalDoubleCone>& cones() const { return cones_; }
    bool empty() const { return cones_.empty(); }

    bool operator==(const Region&) const = default;

  private:
    std::vector<MinimalDoubleCone> cones_;
};

/** Linear basis (as monomials, up to scalar phases) of the local algebra of
 *  a catalogued region: slice intervals carry all monomials over their
 *  sites in occupancy-mask order; the two observer regions carry their
 *  four-element bases. Throws UnsupportedRegion otherwise. */
std::vector<Monomial> local_basis(const Region& region);

/** Three self-adjoint unitaries satisfying the spin-half relations
 *  (pairwise anticommuting, each squaring to 1). */
struct ObservableTriple {
    std::array<AlgebraElement, 3> component;
};

/** Spin triple generating the left observer algebra. */
ObservableTriple observable_triple_left();
/** Spin triple generating the right observer algebra. */
ObservableTriple observable_triple_right();

using Direction = std::array<double, 3>;

/** Spin projection (1 + a . triple)/2 along a unit direction. */
AlgebraElement spin_projection(const ObservableTriple& triple, const Direction& a);
/** Left-observer spin projection along a. Throws NotUnitVector. */
AlgebraElement spin_projection_left(const Direction& a);
/** Right-observer spin projection along b. */
AlgebraElement spin_projection_right(const Direction& b);

/** A state given by its density element: phi(x) = trace(rho x). */
struct LatticeState {
    AlgebraElement rho;
};

/** The one-parameter family interpolating from the trace (lambda = 0) to
 *  the maximally correlating state of the two observer regions
 *  (lambda = 1, which is admitted although it is a boundary case).
 *  Throws LambdaOutOfRange outside [0, 1]. */
LatticeState state_family(double lambda);

/** Validates trace one, self-adjointness and matrix positivity (smallest
 *  representation eigenvalue >= -1e-10) before accepting rho. */
LatticeState state_from_density(const AlgebraElement& rho);

Complex evaluate(const LatticeState& state, const AlgebraElement& x);

/** One time-step automorphism: maps the generator at half-integer x to the
 *  ordered product of the generators at x - 1/2, x, x + 1/2, extended
 *  multiplicatively and linearly. Only defined on elements generated by
 *  half-integer sites; throws UnspecifiedDynamics otherwise. */
AlgebraElement time_step(const AlgebraElement& x);

/** Basis of the relative commutant {x in span(local_basis(ambient)) :
 *  [x, g] = 0 for all g}. Every generator must lie in the ambient span.
 *  Deterministic: Gaussian elimination over the basis coefficients. */
std::vector<AlgebraElement> commutant_in(const std::vector<AlgebraElement>& generators,
                                         const Region& ambient);

/** Which backward-cone combination a probe must lie in. */
enum class PastKind {
    Weak,    // union of the two regions' backward cones
    Common,  // intersection of the regions' backward cones
    Strong,  // intersection over every cone of both regions
};

/** Is cone c inside the backward light cone of cone d (t <= s and
 *  |i - j| <= s - t in doubled coordinates)? */
bool in_backward_cone(MinimalDoubleCone c, MinimalDoubleCone d);

bool in_past(PastKind kind, const Region& a, const Region& b, MinimalDoubleCone c);
bool in_past(PastKind kind, const Region& a, const Region& b, const Region& probe);

}  // namespace isinglab

#endif  // ISINGLAB_NET_HPP
