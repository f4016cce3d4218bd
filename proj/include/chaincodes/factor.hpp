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
#include <vector>

#include "chaincodes/poly.hpp"

namespace chaincodes {

inline constexpr std::uint64_t kDefaultSeed = 0x5eedc0de2016ULL;

/// Complete factorization x^n - delta = f_1 ... f_r into pairwise distinct
/// monic irreducibles, in canonical order (see canonical_less).
struct Factorization {
    FieldPtr field;
    std::size_t n = 0;
    FieldElement delta;
    std::vector<Poly> factors;

    std::size_t size() const noexcept { return factors.size(); }
    std::vector<std::size_t> degrees() const;
    Poly product() const;
};

/// Ascending degree; equal degrees compare coefficients from the leading
/// term downwards by integer encoding.
bool canonical_less(const Poly& a, const Poly& b);

/// Irreducibility over the coefficient field: no factor of degree <= deg/2,
/// tested with gcd(x^{q^k} - x, f).
bool is_irreducible(const Poly& f);

/// Distinct-degree factorization of a monic squarefree polynomial; returns
/// pairs (product of all irreducible factors of degree d, d).
std::vector<std::pair<Poly, std::size_t>> distinct_degree_factor(const Poly& f);

/// Splits a monic squarefree product of irreducibles of common degree d
/// (Cantor-Zassenhaus; trace map in characteristic 2). Output order follows
/// the random splits; callers sort.
std::vector<Poly> equal_degree_factor(const Poly& f, std::size_t d, std::uint64_t seed);

/// Factors a monic squarefree polynomial into canonical order.
std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t seed = kDefaultSeed);

Factorization factor_xn_minus_delta(const FieldPtr& field, std::size_t n, FieldElement delta,
                                    std::uint64_t seed = kDefaultSeed);

}  // namespace chaincodes
