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

#ifndef ISINGLAB_ALGEBRA_HPP
#define ISINGLAB_ALGEBRA_HPP

#include <compare>
#include <complex>
#include <map>
#include <string>
#include <vector>

namespace isinglab {

using Complex = std::complex<double>;

/** Coefficients with modulus below this are dropped after every operation,
 *  so that exact cancellations (which occur constantly, the structure
 *  constants are all +/-1) yield exactly empty terms. */
inline constexpr double kCoeffPrune = 1e-14;

/** A lattice site on the half-integer chain, stored as a doubled integer:
 *  doubled = 2*position. Even values are integer sites, odd values are
 *  half-integer sites. Two generators anticommute exactly when their
 *  doubled distance is 1, and commute otherwise. */
struct Site {
    int doubled = 0;

    static constexpr Site from_doubled(int d) { return Site{d}; }
    /** Site at integer position n. */
    static constexpr Site integer(int n) { return Site{2 * n}; }
    /** Site at half-integer position n + 1/2. */
    static constexpr Site half(int n) { return Site{2 * n + 1}; }

    bool is_integer() const { return (doubled % 2) == 0; }
    double position() const { return 0.5 * static_cast<double>(doubled); }

    auto operator<=>(const Site&) const = default;
};

/** Renders "-1/2", "0", "3/2", ... */
std::string to_string(Site s);

/** A product of distinct generators in strictly ascending site order.
 *  The empty monomial is the identity. Monomials of this form are a linear
 *  basis of the (finite-window) generator algebra: the square relation
 *  removes repeated factors and the exchange relations order the rest at
 *  the cost of a sign. */
struct Monomial {
    std::vector<Site> sites;  // strictly ascending

    bool is_identity() const { return sites.empty(); }
    std::size_t degree() const { return sites.size(); }

    static Monomial identity() { return {}; }
    static Monomial generator(Site s) { return Monomial{{s}}; }

    auto operator<=>(const Monomial&) const = default;
};

std::string to_string(const Monomial& m);

/** A finite linear combination of basis monomials with complex
 *  coefficients, kept in canonical (sorted, pruned) form. */
class AlgebraElement {
  public:
    using TermMap = std::map<Monomial, Complex>;

    AlgebraElement() = default;

    static AlgebraElement zero() { return {}; }
    static AlgebraElement identity();
    static AlgebraElement generator(Site s);
    static AlgebraElement monomial(Monomial m, Complex coeff = 1.0);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /** Coefficient of a basis monomial (0 if absent). */
    Complex coefficient(const Monomial& m) const;

    /** All sites appearing in any term, ascending. */
    std::vector<Site> support() const;

    void add_term(const Monomial& m, Complex coeff);

    AlgebraElement& operator+=(const AlgebraElement& rhs);
    AlgebraElement& operator-=(const AlgebraElement& rhs);
    AlgebraElement& operator*=(Complex scalar);

    friend AlgebraElement operator+(AlgebraElement lhs, const AlgebraElement& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend AlgebraElement operator-(AlgebraElement lhs, const AlgebraElement& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend AlgebraElement operator*(Complex scalar, AlgebraElement rhs) {
        rhs *= scalar;
        return rhs;
    }

    bool operator==(const AlgebraElement&) const = default;

  private:
    TermMap terms_;
};

std::string to_string(const AlgebraElement& x);

/** Normal form of the product of two basis monomials: the surviving sites
 *  are the symmetric difference, the sign counts the half-step-neighbor
 *  transpositions performed while merging. */
struct SignedMonomial {
    Monomial monomial;
    int sign = 1;  // +1 or -1
};

SignedMonomial mul(const Monomial& a, const Monomial& b);

/** Normal form of an arbitrary word of generators (any order, repeats
 *  allowed). Repeats cancel in pairs, the rest is sorted with the sign of
 *  the required half-step transpositions. */
SignedMonomial normalize_word(const std::vector<Site>& word);

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);

inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    return mul(x, y);
}

/** Adjoint: conjugate coefficients, reverse each generator product and
 *  re-normalize to ascending order. */
AlgebraElement adjoint(const AlgebraElement& x);

/** The unique normalized trace: the coefficient of the identity monomial.
 *  Every non-identity monomial is traceless. */
Complex trace(const AlgebraElement& x);

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);

/** Sum of coefficient moduli. A cheap upper-bound norm used for exact-zero
 *  and closeness checks throughout. */
double one_norm(const AlgebraElement& x);

bool is_selfadjoint(const AlgebraElement& x, double tol);

/** Checks x*x == x and x == adjoint(x) within tol (in one_norm). */
bool is_projection(const AlgebraElement& x, double tol);

}  // namespace isinglab

#endif  // ISINGLAB_ALGEBRA_HPP
