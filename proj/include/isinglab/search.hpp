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

#ifndef ISINGLAB_SEARCH_HPP
#define ISINGLAB_SEARCH_HPP

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "isinglab/kernel.hpp"
#include "isinglab/net.hpp"
#include "isinglab/qcausal.hpp"

namespace isinglab {

/** Parameters of the two-sided candidate family: a pair of unit 3-vectors
 *  steering the even and odd sector of the central projection. */
struct CandidateC {
    Direction c{1.0, 0.0, 0.0};
    Direction c_prime{1.0, 0.0, 0.0};
};

/** The four measurement directions of a Clauser-Horne grid: two per side. */
struct DirectionGrid {
    std::array<Direction, 2> a{};
    std::array<Direction, 2> b{};

    /** The standard maximally violating grid: a1 = e_y, a2 = e_x,
     *  b1 = (e_x + e_y)/sqrt(2), b2 = (-e_x + e_y)/sqrt(2). */
    static DirectionGrid standard();
};

/** Knobs shared by the search routines. */
struct SearchConfig {
    int resolution = 24;            // grid points per angular coordinate, >= 2
    std::int64_t budget = 100000;   // objective evaluations allowed, >= 1
    std::uint64_t seed = 0;         // drives every random draw
    double tol = 1e-10;             // solution acceptance threshold

    /** Throws MalformedInput on resolution < 2 or budget < 1. */
    void validate() const;
};

/** One accepted grid point of a parameter-space scan. */
struct GridSolution {
    CandidateC params;
    double residual = 0.0;
};

struct SearchResult {
    double best_residual = 0.0;
    CandidateC best_params{};               // sphere-parametrized searches
    std::vector<double> best_coefficients;  // commutant-parametrized searches
    std::int64_t evaluations = 0;
    bool satisfied = false;                 // best_residual <= tol
    std::vector<GridSolution> solutions;    // all grid points at or below tol
};

/** The candidate central projection
 *      (1 + V)(1 + c . W)/4 + (1 - V)(1 + c' . W)/4
 *  where V is the product of the generators at -1/2 and +1/2 and
 *  W = (U_0, U_{1/2}, i U_0 U_{1/2}). A projection for every pair of unit
 *  vectors; supported on the common-past interval. Throws NotUnitVector. */
AlgebraElement build_candidate(const CandidateC& cand);

/** Builds the four spin-projection pairs along the grid directions, the
 *  state at the given interpolation parameter, and the two-cell partition
 *  {C, 1 - C} from the candidate; returns the joint screening verdict. */
CausalVerdict verify_prop3(const DirectionGrid& directions, const CandidateC& cand,
                           double lambda, double tol = kVerdictTol);

/** Affine map of the candidate family into a dense window algebra:
 *  to_dense(build_candidate({c, c'})) = map * (1, c1, c2, c3, c1', c2', c3').
 *  The window must contain the common-past interval. */
Eigen::MatrixXcd candidate_affine_map(const WindowAlgebra& algebra);

/** Scans (c, c') over a sphere-product grid (azimuth x polar per sphere,
 *  poles included once), minimizing the worst screening residual of the
 *  two-cell candidate partition against the four direction-grid pairs, then
 *  refines the best point by coordinate descent. Collects every grid point
 *  at or below config.tol. Deterministic for a fixed config, independent of
 *  the number of worker threads. */
SearchResult search_noncommuting(const LatticeState& state, const DirectionGrid& directions,
                                 const SearchConfig& config);

/** Searches the relative commutant of the given pairs inside the ambient
 *  region for a two-cell commuting partition {x, 1 - x} with small joint
 *  screening residual. Multi-start local descent over the Hermitian
 *  commutant coefficients with a projection-defect penalty steers the soft
 *  element; every candidate is spectrally rounded to exact projections whose
 *  true verdict residuals feed best_residual and best_coefficients (the
 *  rounded projection expanded in the commutant basis the search used).
 *  A large best residual is numerical evidence of infeasibility, not a
 *  proof. Throws UnsupportedRegion when the ambient region is not a
 *  catalogued family or does not contain every pair's support. */
SearchResult search_commuting(const LatticeState& state,
                              const std::vector<ProjectionPair>& pairs,
                              const Region& ambient, const SearchConfig& config);

}  // namespace isinglab

#endif  // ISINGLAB_SEARCH_HPP
