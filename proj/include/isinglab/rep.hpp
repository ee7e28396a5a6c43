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

#ifndef ISINGLAB_REP_HPP
#define ISINGLAB_REP_HPP

#include <Eigen/Dense>

#include "isinglab/algebra.hpp"

namespace isinglab {

/** A contiguous run of chain sites, inclusive on both ends, in doubled
 *  coordinates. Contains every half-step site in between. */
struct Window {
    int lo_doubled = 0;
    int hi_doubled = 0;

    static Window covering(const AlgebraElement& x);
    static Window covering(Site lo, Site hi) { return {lo.doubled, hi.doubled}; }

    int site_count() const { return hi_doubled - lo_doubled + 1; }
    /** Index of a site within the window, throws SiteOutOfWindow. */
    int index_of(Site s) const;
    bool contains(Site s) const {
        return s.doubled >= lo_doubled && s.doubled <= hi_doubled;
    }
    /** Matrix dimension: one qubit per site plus one boundary qubit. */
    long dimension() const { return 1L << (site_count() + 1); }
};

using Matrix = Eigen::MatrixXcd;

/** Faithful matrix image of a window's worth of the chain algebra.
 *
 *  The j-th site of the window (ascending) acts on n+1 qubits as a
 *  phase-then-flip pair: a Pauli Z on qubit j times a Pauli X on qubit
 *  j+1, with qubit j addressed by bit j of the basis index (bit 0 least
 *  significant). Adjacent sites share exactly one qubit with conflicting
 *  actions and anticommute; all other pairs act on disjoint qubits and
 *  commute; every image squares to the identity. This matches the chain
 *  relations, so linear extension of monomial products is an injective
 *  *-homomorphism, and the normalized matrix trace pulls back to the
 *  canonical trace. The bit conventions above are fixed so that oracle
 *  values are reproducible bit for bit. */
Matrix rep(const AlgebraElement& x, const Window& window);

/** Image of a single basis monomial (a signed subset-permutation matrix). */
Matrix rep(const Monomial& m, const Window& window);

/** Inverse of rep on its image: recovers coefficients by Hilbert-Schmidt
 *  projection onto the (orthogonal) monomial images. */
AlgebraElement unrep(const Matrix& mat, const Window& window);

/** Normalized matrix trace: trace(M) / dim. Pulls back trace(). */
Complex normalized_trace(const Matrix& m);

/** Smallest eigenvalue of a (self-adjoint) matrix. */
double min_eigenvalue(const Matrix& m);

}  // namespace isinglab

#endif  // ISINGLAB_REP_HPP
