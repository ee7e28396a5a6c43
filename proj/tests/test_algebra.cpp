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
// Generator algebra unit tests. The dense matrix image (rep) is the
// independent oracle: the symbolic engine does sign bookkeeping by counted
// transpositions while the matrices multiply phase-and-flip operators, and
// the two must agree everywhere.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "isinglab/algebra.hpp"
#include "isinglab/errors.hpp"
#include "isinglab/rep.hpp"

using namespace isinglab;
using isinglab::testing::Rng;
using isinglab::testing::frob;
using isinglab::testing::random_element;
using isinglab::testing::random_monomial;

namespace {

const Window kWindow6{-3, 2};  // six sites: -3/2 .. 1

AlgebraElement gen(int doubled) { return AlgebraElement::generator(Site{doubled}); }

Monomial mono(std::initializer_list<int> doubled) {
    Monomial m;
    for (int d : doubled) m.sites.push_back(Site{d});
    return m;
}

}  // namespace

TEST_CASE("generators square to the identity") {
    for (int d = -3; d <= 2; ++d) {
        AlgebraElement sq = mul(gen(d), gen(d));
        CHECK(sq == AlgebraElement::identity());
        Matrix img = rep(Monomial::generator(Site{d}), kWindow6);
        CHECK(frob(img * img - Matrix::Identity(img.rows(), img.cols())) == doctest::Approx(0.0));
    }
}

TEST_CASE("half-step neighbors anticommute, all other pairs commute") {
    for (int d1 = -3; d1 <= 2; ++d1) {
        for (int d2 = -3; d2 <= 2; ++d2) {
            AlgebraElement anti = mul(gen(d1), gen(d2)) + mul(gen(d2), gen(d1));
            AlgebraElement comm = commutator(gen(d1), gen(d2));
            if (std::abs(d1 - d2) == 1) {
                CHECK(anti.is_zero());
            } else {
                CHECK(comm.is_zero());
            }
            // Same relations for the matrix images.
            Matrix m1 = rep(gen(d1), kWindow6);
            Matrix m2 = rep(gen(d2), kWindow6);
            Matrix target = (std::abs(d1 - d2) == 1) ? Matrix(m1 * m2 + m2 * m1)
                                                     : Matrix(m1 * m2 - m2 * m1);
            CHECK(frob(target) == doctest::Approx(0.0));
        }
    }
}

TEST_CASE("product reordering pays one sign per crossed half-step neighbor") {
    // U(-1/2) U(-1) = -U(-1) U(-1/2)
    AlgebraElement p = mul(gen(-1), gen(-2));
    REQUIRE(p.term_count() == 1);
    CHECK(p.coefficient(mono({-2, -1})) == Complex{-1.0});

    // (U(-1) U(0)) (U(0) U(1)) = U(-1) U(1): the shared factor cancels and
    // no half-step crossings remain.
    AlgebraElement left = AlgebraElement::monomial(mono({-2, 0}));
    AlgebraElement right = AlgebraElement::monomial(mono({0, 2}));
    AlgebraElement prod = mul(left, right);
    REQUIRE(prod.term_count() == 1);
    CHECK(prod.coefficient(mono({-2, 2})) == Complex{1.0});
}

TEST_CASE("normalize_word sorts arbitrary words with the right sign") {
    // U(1/2) U(0) -> -U(0) U(1/2)
    SignedMonomial s = normalize_word({Site{1}, Site{0}});
    CHECK(s.sign == -1);
    CHECK(s.monomial == mono({0, 1}));

    // A word with a repeated site collapses: U(0) U(1/2) U(0) = -U(1/2).
    s = normalize_word({Site{0}, Site{1}, Site{0}});
    CHECK(s.sign == -1);
    CHECK(s.monomial == mono({1}));
}

TEST_CASE("monomial products agree with the matrix oracle everywhere") {
    // All 64 x 64 pairs of basis monomials over a six-site window.
    int n = kWindow6.site_count();
    for (std::uint64_t ma = 0; ma < (1ULL << n); ++ma) {
        Monomial a;
        for (int j = 0; j < n; ++j) {
            if (ma & (1ULL << j)) a.sites.push_back(Site{kWindow6.lo_doubled + j});
        }
        Matrix ra = rep(a, kWindow6);
        for (std::uint64_t mb = 0; mb < (1ULL << n); ++mb) {
            Monomial b;
            for (int j = 0; j < n; ++j) {
                if (mb & (1ULL << j)) b.sites.push_back(Site{kWindow6.lo_doubled + j});
            }
            SignedMonomial p = mul(a, b);
            Matrix expect = ra * rep(b, kWindow6);
            Matrix got = static_cast<double>(p.sign) * rep(p.monomial, kWindow6);
            REQUIRE(frob(got - expect) == doctest::Approx(0.0));
        }
    }
}

TEST_CASE("element products agree with the matrix oracle on random elements") {
    Rng rng(0xA15EBA11);
    for (int trial = 0; trial < 50; ++trial) {
        AlgebraElement x = random_element(rng, -3, 2, 5);
        AlgebraElement y = random_element(rng, -3, 2, 5);
        Matrix direct = rep(x, kWindow6) * rep(y, kWindow6);
        Matrix symbolic = rep(mul(x, y), kWindow6);
        CHECK(frob(direct - symbolic) <= 1e-10);
    }
}

TEST_CASE("multiplication is associative") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        bool exact = trial < 100;  // first half: coefficients closed under exact float ops
        AlgebraElement x = random_element(rng, -3, 2, 4, exact);
        AlgebraElement y = random_element(rng, -3, 2, 4, exact);
        AlgebraElement z = random_element(rng, -3, 2, 4, exact);
        double defect = one_norm(mul(mul(x, y), z) - mul(x, mul(y, z)));
        if (exact) {
            CHECK(defect == 0.0);
        } else {
            CHECK(defect <= 1e-12);
        }
    }
}

TEST_CASE("adjoint reverses products and is an involution") {
    // (i U(-1/2) U(0))^* = i U(-1/2) U(0): reversing the two anticommuting
    // factors cancels the conjugated i.
    AlgebraElement w = AlgebraElement::monomial(mono({-1, 0}), Complex{0.0, 1.0});
    CHECK(adjoint(w) == w);

    // (U(0) U(1/2))^* = -U(0) U(1/2).
    AlgebraElement v = AlgebraElement::monomial(mono({0, 1}));
    CHECK(adjoint(v) == -1.0 * v);

    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        AlgebraElement x = random_element(rng, -3, 2, 5);
        AlgebraElement y = random_element(rng, -3, 2, 5);
        CHECK(adjoint(adjoint(x)) == x);
        CHECK(one_norm(adjoint(mul(x, y)) - mul(adjoint(y), adjoint(x))) <= 1e-12);
        // Oracle: the matrix image of the adjoint is the conjugate transpose.
        CHECK(frob(rep(adjoint(x), kWindow6) - rep(x, kWindow6).adjoint()) <= 1e-12);
    }
}

TEST_CASE("trace picks the identity coefficient and kills every other monomial") {
    CHECK(trace(AlgebraElement::identity()) == Complex{1.0});
    Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        Monomial m = random_monomial(rng, -3, 2);
        if (m.is_identity()) continue;
        CHECK(trace(AlgebraElement::monomial(m)) == Complex{0.0});
        // Oracle: matrix trace of a nonidentity image vanishes.
        CHECK(std::abs(normalized_trace(rep(m, kWindow6))) == doctest::Approx(0.0));
    }
}

TEST_CASE("trace is tracial and matches the normalized matrix trace") {
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        AlgebraElement x = random_element(rng, -3, 2, 5);
        AlgebraElement y = random_element(rng, -3, 2, 5);
        CHECK(std::abs(trace(mul(x, y)) - trace(mul(y, x))) <= 1e-12);
        CHECK(std::abs(trace(x) - normalized_trace(rep(x, kWindow6))) <= 1e-12);
        // Faithful positivity: trace(x* x) >= 0, zero only for zero.
        Complex positive = trace(mul(adjoint(x), x));
        CHECK(positive.real() >= 0.0);
        CHECK(std::abs(positive.imag()) <= 1e-12);
        if (!x.is_zero()) CHECK(positive.real() > 0.0);
    }
}

TEST_CASE("commutator examples") {
    // [U(0), U(1/2)] = 2 U(0) U(1/2).
    AlgebraElement c = commutator(gen(0), gen(1));
    REQUIRE(c.term_count() == 1);
    CHECK(c.coefficient(mono({0, 1})) == Complex{2.0});
    // Commuting pair: exactly zero, no residue terms.
    CHECK(commutator(gen(0), gen(2)).is_zero());
    // Oracle cross-check.
    Matrix m0 = rep(gen(0), kWindow6);
    Matrix m1 = rep(gen(1), kWindow6);
    CHECK(frob(rep(c, kWindow6) - (m0 * m1 - m1 * m0)) == doctest::Approx(0.0));
}

TEST_CASE("projection predicate") {
    AlgebraElement half_up = 0.5 * (AlgebraElement::identity() + gen(0));
    CHECK(is_projection(half_up, 1e-12));
    CHECK(!is_projection(gen(0), 1e-12));  // self-adjoint unitary, not idempotent
    AlgebraElement w = AlgebraElement::monomial(mono({-1, 0}), Complex{0.0, 1.0});
    CHECK(is_projection(0.5 * (AlgebraElement::identity() + w), 1e-12));
    CHECK(!is_projection(0.7 * (AlgebraElement::identity() + gen(0)), 1e-10));
}

TEST_CASE("representation is faithful on the monomial basis") {
    // Distinct monomials map to Hilbert-Schmidt-orthogonal nonzero images,
    // and unrep inverts rep coefficient by coefficient.
    int n = kWindow6.site_count();
    std::vector<Matrix> images;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        Monomial m;
        for (int j = 0; j < n; ++j) {
            if (mask & (1ULL << j)) m.sites.push_back(Site{kWindow6.lo_doubled + j});
        }
        images.push_back(rep(m, kWindow6));
        CHECK(frob(images.back()) > 0.0);
    }
    Rng rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        auto i = static_cast<std::size_t>(rng.uniform_int(0, (1 << n) - 1));
        auto j = static_cast<std::size_t>(rng.uniform_int(0, (1 << n) - 1));
        Complex overlap = (images[i].adjoint() * images[j]).trace();
        if (i == j) {
            CHECK(overlap.real() == doctest::Approx(static_cast<double>(kWindow6.dimension())));
        } else {
            CHECK(std::abs(overlap) == doctest::Approx(0.0));
        }
    }
}

TEST_CASE("unrep inverts rep") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        AlgebraElement x = random_element(rng, -3, 2, 6);
        AlgebraElement back = unrep(rep(x, kWindow6), kWindow6);
        CHECK(one_norm(back - x) <= 1e-10);
    }
}

TEST_CASE("rep rejects sites outside the window") {
    CHECK_THROWS_AS(rep(gen(4), kWindow6), SiteOutOfWindow);
    CHECK_THROWS_AS(rep(gen(-4), kWindow6), SiteOutOfWindow);
}

TEST_CASE("coefficient pruning keeps canonical form") {
    AlgebraElement x = gen(0);
    x += -1.0 * gen(0);
    CHECK(x.is_zero());
    Rng rng(29);
    AlgebraElement y = random_element(rng, -1, 1, 3);
    CHECK((0.0 * y).is_zero());
    AlgebraElement tiny = AlgebraElement::monomial(mono({0}), 1e-15);
    CHECK(tiny.is_zero());
}
