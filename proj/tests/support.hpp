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

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "chaincodes/ambient.hpp"
#include "chaincodes/codes.hpp"
#include "chaincodes/decomposition.hpp"
#include "chaincodes/poly.hpp"

namespace chaincodes::testing {

inline FieldElement random_element(const Field& F, std::mt19937_64& rng) {
    return F.element(std::uniform_int_distribution<std::uint32_t>(0, F.order() - 1)(rng));
}

inline FieldElement random_unit(const Field& F, std::mt19937_64& rng) {
    return F.element(std::uniform_int_distribution<std::uint32_t>(1, F.order() - 1)(rng));
}

inline Poly random_poly(const FieldPtr& F, std::size_t max_degree, std::mt19937_64& rng) {
    std::vector<FieldElement> c(max_degree + 1);
    for (auto& x : c) x = random_element(*F, rng);
    return Poly(F, std::move(c));
}

inline RingElement random_ring(const Field& F, std::mt19937_64& rng) {
    RingElement r;
    for (auto& c : r.c) c = random_element(F, rng);
    return r;
}

inline AmbientElement random_ambient(const AmbientPtr& amb, std::mt19937_64& rng) {
    std::vector<RingElement> c(amb->length());
    for (auto& x : c) x = random_ring(*amb->field(), rng);
    return AmbientElement(amb, std::move(c));
}

inline CodeIndex random_index(std::size_t r, std::mt19937_64& rng) {
    std::vector<int> ls(r);
    for (auto& l : ls) l = std::uniform_int_distribution<int>(0, 4)(rng);
    return CodeIndex(std::move(ls));
}

/// All monic polynomials of degree d, in counting order.
inline std::vector<Poly> all_monic(const FieldPtr& F, std::size_t d) {
    std::vector<Poly> out;
    std::vector<std::uint32_t> digits(d, 0);
    for (;;) {
        std::vector<std::uint32_t> values = digits;
        values.push_back(1);
        out.push_back(Poly::from_values(F, values));
        std::size_t i = 0;
        while (i < d && ++digits[i] == F->order()) digits[i++] = 0;
        if (i == d) break;
    }
    return out;
}

/// Factors a monic polynomial by trial division with every monic polynomial
/// of increasing degree; no shortcuts, for cross-checking the real factorizer.
inline std::vector<Poly> trial_division_factor(Poly f) {
    const FieldPtr F = f.field();
    std::vector<Poly> out;
    for (std::size_t d = 1; static_cast<int>(2 * d) <= f.degree(); ++d) {
        for (const auto& g : all_monic(F, d)) {
            while (f.degree() >= g.degree() && (f % g).is_zero()) {
                out.push_back(g);
                f = f / g;
            }
        }
    }
    if (f.degree() > 0) out.push_back(f);
    return out;
}

/// Schoolbook product in R[x] followed by x^n -> lambda, written against the
/// raw coefficient arrays.
inline AmbientElement naive_ambient_mul(const AmbientElement& a, const AmbientElement& b) {
    const auto& amb = a.ambient();
    const Field& F = *amb->field();
    const std::size_t n = amb->length();
    std::vector<RingElement> full(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (int s = 0; s < 4; ++s) {
                for (int t = 0; s + t < 4; ++t) {
                    auto& slot = full[i + j].c[s + t];
                    slot = F.add(slot, F.mul(a[i].c[s], b[j].c[t]));
                }
            }
        }
    }
    std::vector<RingElement> out(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t k = n; k < 2 * n; ++k) {
        for (int s = 0; s < 4; ++s) {
            for (int t = 0; s + t < 4; ++t) {
                auto& slot = out[k - n].c[s + t];
                slot = F.add(slot, F.mul(amb->lambda().c[s], full[k].c[t]));
            }
        }
    }
    return AmbientElement(amb, std::move(out));
}

struct Instance {
    std::uint32_t p;
    std::uint32_t m;
    std::size_t n;
};

/// Instances with q in {2, 3, 4, 8} and n <= 15, coprime to p.
inline const std::vector<Instance>& property_instances() {
    static const std::vector<Instance> v{{2, 1, 15}, {2, 1, 9}, {3, 1, 8}, {3, 1, 10}, {2, 2, 5},
                                         {2, 2, 9},  {2, 3, 7}, {2, 3, 3}, {3, 1, 13}};
    return v;
}

inline Decomposition decompose_random(const Instance& inst, std::mt19937_64& rng) {
    auto F = Field::create(inst.p, inst.m);
    return compute_decomposition(F, inst.n, random_unit(*F, rng), random_unit(*F, rng));
}

}  // namespace chaincodes::testing
