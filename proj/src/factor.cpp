/*
   Copyright 2026 The chaincodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "chaincodes/factor.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "chaincodes/error.hpp"

namespace chaincodes {

namespace {

Poly frobenius(const Poly& a, const Poly& modulus) { return powmod(a, a.field()->order(), modulus); }

Poly random_poly(const FieldPtr& field, std::size_t below_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, field->order() - 1);
    std::vector<FieldElement> c(below_degree);
    for (auto& x : c) x = FieldElement{dist(rng)};
    return Poly(field, std::move(c));
}

// One attempt at a nontrivial splitting element of f = product of degree-d
// irreducibles; returns gcd(a, f) or gcd(test(a), f).
Poly split_candidate(const Poly& f, std::size_t d, const Poly& a) {
    const auto& field = f.field();
    Poly g = gcd(a, f);
    if (g.degree() > 0) return g;
    if (field->characteristic() == 2) {
        // Absolute trace to F_2: a + a^2 + ... + a^{2^{md-1}}.
        const std::size_t steps = std::size_t{field->degree()} * d;
        Poly t = a, acc = a;
        for (std::size_t i = 1; i < steps; ++i) {
            t = mulmod(t, t, f);
            acc += t;
        }
        return gcd(acc, f);
    }
    // a^{(q^d - 1)/2} as the product of the conjugates of a^{(q-1)/2}.
    Poly b = powmod(a, (field->order() - 1) / 2, f);
    Poly acc = b;
    for (std::size_t i = 1; i < d; ++i) {
        b = frobenius(b, f);
        acc = mulmod(acc, b, f);
    }
    return gcd(acc - Poly::constant(field, field->one()), f);
}

}  // namespace

std::vector<std::size_t> Factorization::degrees() const {
    std::vector<std::size_t> d;
    d.reserve(factors.size());
    for (const auto& f : factors) d.push_back(static_cast<std::size_t>(f.degree()));
    return d;
}

Poly Factorization::product() const {
    Poly acc = Poly::constant(field, field->one());
    for (const auto& f : factors) acc *= f;
    return acc;
}

bool canonical_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
    }
    return false;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const Poly x = Poly::x(f.field());
    Poly h = x % f;
    for (int k = 1; 2 * k <= f.degree(); ++k) {
        h = frobenius(h, f);
        if (gcd(h - x, f).degree() > 0) return false;
    }
    return true;
}

std::vector<std::pair<Poly, std::size_t>> distinct_degree_factor(const Poly& f) {
    if (!f.is_monic()) throw Error(ErrorCode::InvalidInput, "distinct-degree factorization needs a monic polynomial");
    std::vector<std::pair<Poly, std::size_t>> out;
    const Poly x = Poly::x(f.field());
    Poly rest = f;
    Poly h = x % rest;
    for (std::size_t k = 1; rest.degree() >= static_cast<int>(2 * k); ++k) {
        h = frobenius(h, rest);
        Poly g = gcd(h - x, rest);
        if (g.degree() > 0) {
            rest = rest / g;
            h = h % rest;
            out.emplace_back(std::move(g), k);
        }
    }
    if (rest.degree() > 0) {
        const auto d = static_cast<std::size_t>(rest.degree());
        out.emplace_back(std::move(rest), d);
    }
    return out;
}

std::vector<Poly> equal_degree_factor(const Poly& f, std::size_t d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Poly> done;
    std::vector<Poly> pending{f};
    while (!pending.empty()) {
        Poly g = std::move(pending.back());
        pending.pop_back();
        if (static_cast<std::size_t>(g.degree()) == d) {
            done.push_back(std::move(g));
            continue;
        }
        for (;;) {
            const Poly a = random_poly(f.field(), static_cast<std::size_t>(g.degree()), rng);
            if (a.degree() < 1) continue;
            Poly s = split_candidate(g, d, a);
            if (s.degree() > 0 && s.degree() < g.degree()) {
                pending.push_back(g / s);
                pending.push_back(std::move(s));
                break;
            }
        }
    }
    return done;
}

std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t seed) {
    std::vector<Poly> out;
    std::uint64_t stream = 0;
    for (auto& [block, d] : distinct_degree_factor(f)) {
        auto parts = equal_degree_factor(block, d, seed + 0x9e3779b97f4a7c15ULL * stream++);
        for (auto& p : parts) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

Factorization factor_xn_minus_delta(const FieldPtr& field, std::size_t n, FieldElement delta, std::uint64_t seed) {
    if (n == 0) throw Error(ErrorCode::InvalidInput, "length n must be positive");
    if (!field->contains(delta)) throw Error(ErrorCode::InvalidInput, "delta is not a field element");
    if (delta.is_zero()) throw Error(ErrorCode::InvalidInput, "delta must be nonzero");
    if (n % field->characteristic() == 0) {
        throw Error(ErrorCode::NotCoprime, "gcd(q, n) != 1: p = " + std::to_string(field->characteristic()) +
                                               " divides n = " + std::to_string(n));
    }
    Factorization out{field, n, delta, factor_squarefree(xn_minus(field, n, delta), seed)};
    return out;
}

}  // namespace chaincodes
