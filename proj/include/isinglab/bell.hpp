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

#ifndef ISINGLAB_BELL_HPP
#define ISINGLAB_BELL_HPP

#include <random>

#include "isinglab/rep.hpp"
#include "isinglab/search.hpp"

namespace isinglab {

/** Tensor factorization of a finite matrix algebra into two commuting
 *  observer sides, by factor dimension. */
struct BellSplit {
    int dim_a = 2;
    int dim_b = 2;

    int total_dimension() const { return dim_a * dim_b; }
    /** Throws MalformedInput unless both factor dimensions are 2 or 4. */
    void validate() const;
};

/** Optional restriction of either side to the diagonal (abelian)
 *  subalgebra of its factor. */
struct BellSideOptions {
    bool diagonal_a = false;
    bool diagonal_b = false;
};

/** |phi(R)| for the correlation operator
 *      R = (X1 (Y1 + Y2) + X2 (Y1 - Y2)) / 2
 *  in the state rho, with the X living on the first tensor factor of the
 *  split and the Y on the second. Arguments are the factor-local matrices.
 *  Throws MalformedInput if rho is not a density matrix on the split, or
 *  if any side matrix is not a self-adjoint contraction of its factor
 *  dimension (tolerance 1e-9). */
double bell_value(const Matrix& rho, const BellSplit& split, const Matrix& x1,
                  const Matrix& x2, const Matrix& y1, const Matrix& y2);

/** Supremum of bell_value over self-adjoint contraction pairs on each side,
 *  estimated by multi-start block-coordinate ascent: the objective is linear
 *  in each side operator, so every sweep maximizes one block exactly over
 *  its coefficient ball. Contractions are parametrized over the Pauli
 *  (factor dimension 2) or Pauli-pair (factor dimension 4) coefficient
 *  basis; random starts are kept feasible by radial rescaling. Deterministic
 *  given config.seed; never exceeds sqrt(2) up to tolerance. Throws
 *  BudgetExhausted, carrying the best value found, when config.budget
 *  objective evaluations run out before the planned starts complete. */
double bell_maximize(const Matrix& rho, const BellSplit& split,
                     const SearchConfig& config, const BellSideOptions& sides = {});

/** The singlet density matrix on the 2-by-2 split: the projection onto
 *  (|01> - |10>)/sqrt(2). Its spin correlations are <s_a s_b> = -a.b. */
Matrix singlet_density();

/** Random density matrix of the given dimension (Ginibre construction). */
Matrix random_density(std::mt19937_64& eng, int dim);

/** Random self-adjoint contraction of the given dimension (2 or 4), drawn
 *  from the feasible coefficient ball; diagonal restricts to the abelian
 *  subalgebra. */
Matrix random_contraction(std::mt19937_64& eng, int dim, bool diagonal = false);

}  // namespace isinglab

#endif  // ISINGLAB_BELL_HPP
