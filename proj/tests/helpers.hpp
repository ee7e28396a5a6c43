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
//
// Deterministic random generators and matrix-oracle helpers shared by the
// test binaries. All randomness flows through a fixed-seed engine with
// hand-rolled transforms, so expected values frozen from oracle runs stay
// reproducible bit for bit.

#ifndef ISINGLAB_TESTS_HELPERS_HPP
#define ISINGLAB_TESTS_HELPERS_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "isinglab/algebra.hpp"
#include "isinglab/net.hpp"
#include "isinglab/rep.hpp"

namespace isinglab::testing {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() {  // [0, 1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    int uniform_int(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double gauss() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    Complex gauss_complex() { return {gauss(), gauss()}; }

    /** A Gaussian-integer-like coefficient from {+-1, +-i, +-1+-i}; products
     *  and sums of these are exact in floating point. */
    Complex exact_coeff() {
        static constexpr Complex table[8] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                                             {1, 1},  {1, -1}, {-1, 1}, {-1, -1}};
        return table[eng_() % 8];
    }

    Direction unit_direction() {
        while (true) {
            double x = gauss(), y = gauss(), z = gauss();
            double n = std::sqrt(x * x + y * y + z * z);
            if (n > 1e-6) return Direction{x / n, y / n, z / n};
        }
    }

    /** Unit direction with zero third component (in the plane where the
     *  correlation formulas live their simplest life). */
    Direction planar_direction() {
        double t = 2.0 * M_PI * uniform();
        return Direction{std::cos(t), std::sin(t), 0.0};
    }

    std::mt19937_64& engine() { return eng_; }

  private:
    std::mt19937_64 eng_;
};

inline Monomial random_monomial(Rng& rng, int lo_doubled, int hi_doubled) {
    Monomial m;
    for (int d = lo_doubled; d <= hi_doubled; ++d) {
        if (rng.uniform() < 0.5) m.sites.push_back(Site{d});
    }
    return m;
}

inline AlgebraElement random_element(Rng& rng, int lo_doubled, int hi_doubled,
                                     int terms, bool exact_coeffs = false) {
    AlgebraElement x;
    for (int t = 0; t < terms; ++t) {
        Complex c = exact_coeffs ? rng.exact_coeff() : rng.gauss_complex();
        x.add_term(random_monomial(rng, lo_doubled, hi_doubled), c);
    }
    return x;
}

inline double frob(const Matrix& m) { return m.norm(); }

/** Is target in the complex linear span of vecs (least-squares residual
 *  below tol in coefficient space)? */
inline bool in_span(const AlgebraElement& target, const std::vector<AlgebraElement>& vecs,
                    double tol = 1e-9) {
    std::vector<Monomial> monomials;
    auto note = [&](const AlgebraElement& x) {
        for (const auto& [m, c] : x.terms()) {
            if (std::find(monomials.begin(), monomials.end(), m) == monomials.end()) {
                monomials.push_back(m);
            }
        }
    };
    note(target);
    for (const auto& v : vecs) note(v);
    Eigen::MatrixXcd a(monomials.size(), vecs.size());
    Eigen::VectorXcd b(monomials.size());
    for (std::size_t r = 0; r < monomials.size(); ++r) {
        b(static_cast<long>(r)) = target.coefficient(monomials[r]);
        for (std::size_t c = 0; c < vecs.size(); ++c) {
            a(static_cast<long>(r), static_cast<long>(c)) = vecs[c].coefficient(monomials[r]);
        }
    }
    Eigen::VectorXcd x = a.colPivHouseholderQr().solve(b);
    return (a * x - b).norm() <= tol;
}

/** Largest coefficient difference between two elements. */
inline double max_coeff_diff(const AlgebraElement& x, const AlgebraElement& y) {
    double worst = 0.0;
    AlgebraElement d = x - y;
    for (const auto& [m, c] : d.terms()) worst = std::max(worst, std::abs(c));
    return worst;
}

}  // namespace isinglab::testing

#endif  // ISINGLAB_TESTS_HELPERS_HPP
