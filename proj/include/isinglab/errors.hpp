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

#ifndef ISINGLAB_ERRORS_HPP
#define ISINGLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isinglab {

/** Base class for all typed errors thrown by this library. */
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/** A direction argument is not a unit vector. */
struct NotUnitVector : Error {
    using Error::Error;
};

/** A mixing parameter lies outside [0, 1]. */
struct LambdaOutOfRange : Error {
    using Error::Error;
};

/** An element references a lattice site outside the representation window. */
struct SiteOutOfWindow : Error {
    using Error::Error;
};

/** A region is not one of the catalogued families with a known local basis. */
struct UnsupportedRegion : Error {
    using Error::Error;
};

/** The one-step dynamics is only defined on half-integer-site generators. */
struct UnspecifiedDynamics : Error {
    using Error::Error;
};

/** Two observables that were required to commute do not. */
struct NoncommutingPair : Error {
    using Error::Error;
};

/** A claimed partition of unit fails projectivity, orthogonality or summation. */
struct MalformedPartition : Error {
    using Error::Error;
};

/** A conditional state was requested on a cell of (near-)zero weight. */
struct ZeroWeightCell : Error {
    using Error::Error;
};

/** A classical conditional probability was requested on a null event. */
struct ZeroConditioningEvent : Error {
    using Error::Error;
};

/** Generic malformed input (bad weights, mismatched shapes, bad flags). */
struct MalformedInput : Error {
    using Error::Error;
};

/** A number expected in [0, 1] is outside it. */
struct DomainError : Error {
    using Error::Error;
};

/** A family of projection partitions fails its partition-of-unit checks. */
struct MalformedGamma : Error {
    using Error::Error;
};

/** An iterative search ran out of budget before completing a full pass.
 *  Carries the best value found so far. */
struct BudgetExhausted : Error {
    double best;
    BudgetExhausted(const std::string& msg, double best_value)
        : Error(msg), best(best_value) {}
};

}  // namespace isinglab

#endif  // ISINGLAB_ERRORS_HPP
