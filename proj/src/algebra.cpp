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

#include "isinglab/algebra.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace isinglab {

std::string to_string(Site s) {
    std::ostringstream out;
    if (s.doubled % 2 == 0) {
        out << s.doubled / 2;
    } else {
        out << s.doubled << "/2";
    }
    return out.str();
}

std::string to_string(const Monomial& m) {
    if (m.is_identity()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < m.sites.size(); ++i) {
        if (i) out << "*";
        out << "U(" << to_string(m.sites[i]) << ")";
    }
    return out.str();
}

AlgebraElement AlgebraElement::identity() {
    AlgebraElement x;
    x.terms_[Monomial::identity()] = 1.0;
    return x;
}

AlgebraElement AlgebraElement::generator(Site s) {
    AlgebraElement x;
    x.terms_[Monomial::generator(s)] = 1.0;
    return x;
}

AlgebraElement AlgebraElement::monomial(Monomial m, Complex coeff) {
    AlgebraElement x;
    x.add_term(m, coeff);
    return x;
}

Complex AlgebraElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Complex{0.0} : it->second;
}

std::vector<Site> AlgebraElement::support() const {
    std::vector<Site> out;
    for (const auto& [m, c] : terms_) {
        for (Site s : m.sites) {
            auto it = std::lower_bound(out.begin(), out.end(), s);
            if (it == out.end() || *it != s) out.insert(it, s);
        }
    }
    return out;
}

void AlgebraElement::add_term(const Monomial& m, Complex coeff) {
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) it->second += coeff;
    if (std::abs(it->second) < kCoeffPrune) terms_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex scalar) {
    if (std::abs(scalar) < kCoeffPrune) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= scalar;
        if (std::abs(it->second) < kCoeffPrune) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
    return *this;
}

std::string to_string(const AlgebraElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
        if (!m.is_identity()) out << "*" << to_string(m);
    }
    return out.str();
}

namespace {

// Append each generator in turn and bubble it left into ascending position.
// Every half-step neighbor it crosses contributes a sign flip; meeting its
// own site cancels both factors (the square relation).
SignedMonomial insert_word(std::vector<Site> out, const std::vector<Site>& word) {
    int sign = 1;
    for (Site g : word) {
        std::size_t pos = out.size();
        bool cancelled = false;
        while (pos > 0) {
            Site h = out[pos - 1];
            if (h < g) break;
            if (h == g) {
                out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos) - 1);
                cancelled = true;
                break;
            }
            if (h.doubled - g.doubled == 1) sign = -sign;
            --pos;
        }
        if (!cancelled) out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), g);
    }
    return SignedMonomial{Monomial{std::move(out)}, sign};
}

}  // namespace

SignedMonomial mul(const Monomial& a, const Monomial& b) {
    return insert_word(a.sites, b.sites);
}

SignedMonomial normalize_word(const std::vector<Site>& word) {
    return insert_word({}, word);
}

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement out;
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            SignedMonomial p = mul(mx, my);
            out.add_term(p.monomial, static_cast<double>(p.sign) * cx * cy);
        }
    }
    return out;
}

AlgebraElement adjoint(const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& [m, c] : x.terms()) {
        // (U_{s_1} ... U_{s_k})^* = U_{s_k} ... U_{s_1}; normalize the
        // reversed word back to ascending order for the sign.
        std::vector<Site> reversed(m.sites.rbegin(), m.sites.rend());
        SignedMonomial p = normalize_word(reversed);
        out.add_term(p.monomial, static_cast<double>(p.sign) * std::conj(c));
    }
    return out;
}

Complex trace(const AlgebraElement& x) {
    return x.coefficient(Monomial::identity());
}

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) {
    return mul(x, y) - mul(y, x);
}

double one_norm(const AlgebraElement& x) {
    double total = 0.0;
    for (const auto& [m, c] : x.terms()) total += std::abs(c);
    return total;
}

bool is_selfadjoint(const AlgebraElement& x, double tol) {
    return one_norm(x - adjoint(x)) <= tol;
}

bool is_projection(const AlgebraElement& x, double tol) {
    return is_selfadjoint(x, tol) && one_norm(mul(x, x) - x) <= tol;
}

}  // namespace isinglab
