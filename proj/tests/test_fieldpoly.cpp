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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "chaincodes/error.hpp"
#include "chaincodes/factor.hpp"
#include "chaincodes/field.hpp"
#include "chaincodes/poly.hpp"
#include "support.hpp"

namespace chaincodes {
namespace {

using testing::all_monic;
using testing::random_element;
using testing::random_poly;
using testing::random_unit;
using testing::trial_division_factor;

Poly P(const FieldPtr& F, std::initializer_list<std::uint32_t> v) { return Poly::from_values(F, v); }

TEST(Field, BinaryBasics) {
    auto F2 = Field::create(2, 1);
    EXPECT_EQ(F2->add(F2->one(), F2->one()), F2->zero());
    EXPECT_EQ(F2->inv(F2->one()), F2->one());
    EXPECT_EQ(F2->order(), 2U);
}

TEST(Field, F4MultiplicationReducesByModulus) {
    auto F4 = Field::create(2, 2);
    ASSERT_EQ(F4->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
    const FieldElement y = F4->element(2);
    EXPECT_EQ(F4->mul(y, y), F4->element(3));  // y^2 = y + 1
    EXPECT_EQ(F4->format(F4->element(3), FieldDisplay::Polynomial), "y+1");
}

TEST(Field, DefaultModulusIsSmallestIrreducible) {
    EXPECT_EQ(Field::create(2, 3)->modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
    EXPECT_EQ(Field::create(3, 2)->modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(Field, ExplicitModulus) {
    auto F8 = Field::create(2, 3, std::vector<std::uint32_t>{1, 0, 1, 1});
    const FieldElement y = F8->element(2);
    EXPECT_EQ(F8->pow(y, 3), F8->element(0b101));  // y^3 = y^2 + 1
}

TEST(Field, RejectsBadParameters) {
    EXPECT_THROW(Field::create(4, 1), Error);
    EXPECT_THROW(Field::create(1, 1), Error);
    EXPECT_THROW(Field::create(2, 0), Error);
    EXPECT_THROW(Field::create(2, 2, std::vector<std::uint32_t>{1, 0, 1}), Error);  // (y+1)^2
    EXPECT_THROW(Field::create(2, 2, std::vector<std::uint32_t>{1, 1}), Error);     // wrong degree
    EXPECT_THROW(Field::create(3, 2, std::vector<std::uint32_t>{1, 0, 2}), Error);  // not monic
    EXPECT_THROW(Field::create(2, 1)->element(2), Error);
}

TEST(Field, InverseOfZeroIsDivisionByZero) {
    auto F = Field::create(3, 2);
    try {
        (void)F->inv(F->zero());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
    }
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(FieldAxioms, HoldOnRandomSamples) {
    auto F = Field::create(GetParam().first, GetParam().second);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const auto a = random_element(*F, rng), b = random_element(*F, rng), c = random_element(*F, rng);
        EXPECT_EQ(F->mul(F->mul(a, b), c), F->mul(a, F->mul(b, c)));
        EXPECT_EQ(F->add(F->add(a, b), c), F->add(a, F->add(b, c)));
        EXPECT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c)));
        EXPECT_EQ(F->mul(a, b), F->mul(b, a));
        EXPECT_EQ(F->sub(F->add(a, b), b), a);
        EXPECT_EQ(F->add(a, F->neg(a)), F->zero());
        if (!a.is_zero()) EXPECT_EQ(F->mul(a, F->inv(a)), F->one());
    }
    // enc is a bijection onto [0, q)
    for (std::uint32_t v = 0; v < F->order(); ++v) EXPECT_EQ(F->from_coords(F->coords(F->element(v))).value, v);
    // the primitive element generates F_q^*
    std::vector<bool> seen(F->order(), false);
    FieldElement g = F->one();
    for (std::uint32_t k = 0; k + 1 < F->order(); ++k, g = F->mul(g, F->primitive())) seen[g.value] = true;
    EXPECT_EQ(std::count(seen.begin(), seen.end(), true), static_cast<long>(F->order() - 1));
}

INSTANTIATE_TEST_SUITE_P(Small, FieldAxioms,
                         ::testing::Values(std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}, std::pair{2, 3},
                                           std::pair{5, 1}, std::pair{3, 2}, std::pair{7, 2}, std::pair{2, 5}));

TEST(Poly, ZeroHasSentinelDegree) {
    auto F = Field::create(2, 1);
    Poly z(F);
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), kZeroDegree);
    EXPECT_EQ(P(F, {1, 0, 0}).degree(), 0);  // trailing zeros trimmed
}

TEST(Poly, DivmodExamples) {
    auto F = Field::create(2, 1);
    auto [q1, r1] = divmod(P(F, {1, 0, 1}), P(F, {1, 1}));
    EXPECT_EQ(q1, P(F, {1, 1}));
    EXPECT_TRUE(r1.is_zero());
    auto [q2, r2] = divmod(P(F, {0, 1}), P(F, {0, 0, 1}));
    EXPECT_TRUE(q2.is_zero());
    EXPECT_EQ(r2, P(F, {0, 1}));
    auto [q3, r3] = divmod(xn_minus(F, 7, F->one()), P(F, {1, 1, 0, 1}));
    EXPECT_EQ(q3, P(F, {1, 1, 1, 0, 1}));
    EXPECT_TRUE(r3.is_zero());
    EXPECT_THROW(divmod(P(F, {1}), Poly(F)), Error);
}

TEST(Poly, DivmodReconstructs) {
    std::mt19937_64 rng(11);
    for (auto [p, m] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}, std::pair{5, 1}}) {
        auto F = Field::create(p, m);
        for (int i = 0; i < 200; ++i) {
            Poly a = random_poly(F, 12, rng), b = random_poly(F, 6, rng);
            if (b.is_zero()) continue;
            auto [q, r] = divmod(a, b);
            EXPECT_EQ(q * b + r, a);
            EXPECT_LT(r.degree(), b.degree());
        }
    }
}

TEST(Poly, ExtGcdExamples) {
    auto F = Field::create(2, 1);
    auto bz = ext_gcd(P(F, {1, 1}), P(F, {0, 1}));
    EXPECT_TRUE(bz.gcd.is_one());
    EXPECT_TRUE(bz.s.is_one());
    EXPECT_TRUE(bz.t.is_one());

    auto F3 = Field::create(3, 1);
    const Poly f = P(F3, {1, 0, 2});  // 2x^2 + 1
    auto same = ext_gcd(f, f);
    EXPECT_EQ(same.gcd, monic(f));
    EXPECT_EQ(same.s * f + same.t * f, monic(f));

    EXPECT_THROW(ext_gcd(Poly(F), Poly(F)), Error);
}

TEST(Poly, BezoutForFirstFactorOfXSevenPlusOne) {
    auto F = Field::create(2, 1);
    const Poly f1 = P(F, {1, 1});
    const Poly F1 = xn_minus(F, 7, F->one()) / f1;
    const auto bz = ext_gcd(F1 * F1, f1 * f1);
    EXPECT_TRUE(bz.gcd.is_one());
    EXPECT_TRUE((bz.s * F1 * F1 + bz.t * f1 * f1).is_one());
}

TEST(Poly, ExtGcdProperties) {
    std::mt19937_64 rng(13);
    for (auto [p, m] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 3}, std::pair{7, 1}}) {
        auto F = Field::create(p, m);
        for (int i = 0; i < 200; ++i) {
            Poly common = random_poly(F, 2, rng);
            Poly a = random_poly(F, 8, rng) * common, b = random_poly(F, 7, rng) * common;
            if (a.is_zero() && b.is_zero()) continue;
            auto bz = ext_gcd(a, b);
            EXPECT_EQ(bz.s * a + bz.t * b, bz.gcd);
            EXPECT_TRUE(bz.gcd.is_monic());
            if (!a.is_zero()) EXPECT_TRUE((a % bz.gcd).is_zero());
            if (!b.is_zero()) EXPECT_TRUE((b % bz.gcd).is_zero());
            if (!a.is_zero() && !b.is_zero() && !(a % b).is_zero() && !(b % a).is_zero()) {
                EXPECT_LT(bz.s.degree(), b.degree() - bz.gcd.degree());
                EXPECT_LT(bz.t.degree(), a.degree() - bz.gcd.degree());
            }
        }
    }
}

TEST(Poly, MixedFieldsRejected) {
    auto F2 = Field::create(2, 1);
    auto F3 = Field::create(3, 1);
    EXPECT_THROW(P(F2, {1, 1}) + P(F3, {1, 1}), Error);
}

TEST(Poly, ReciprocalAndPowmod) {
    auto F = Field::create(2, 1);
    EXPECT_EQ(reciprocal(P(F, {1, 1, 0, 1})), P(F, {1, 0, 1, 1}));
    const Poly mod = P(F, {1, 1, 0, 1});
    EXPECT_TRUE(powmod(Poly::x(F), 7, mod).is_one());  // x has order 7 mod x^3+x+1
}

TEST(Factor, CanonicalOrderComparesFromTheTop) {
    auto F = Field::create(2, 1);
    EXPECT_TRUE(canonical_less(P(F, {1, 1}), P(F, {1, 1, 0, 1})));
    EXPECT_TRUE(canonical_less(P(F, {1, 1, 0, 1}), P(F, {1, 0, 1, 1})));
    EXPECT_FALSE(canonical_less(P(F, {1, 0, 1, 1}), P(F, {1, 1, 0, 1})));
}

TEST(Factor, XSevenPlusOne) {
    auto F = Field::create(2, 1);
    auto fac = factor_xn_minus_delta(F, 7, F->one());
    ASSERT_EQ(fac.size(), 3U);
    EXPECT_EQ(fac.factors[0], P(F, {1, 1}));
    EXPECT_EQ(fac.factors[1], P(F, {1, 1, 0, 1}));
    EXPECT_EQ(fac.factors[2], P(F, {1, 0, 1, 1}));
}

TEST(Factor, LinearCase) {
    auto F = Field::create(2, 1);
    auto fac = factor_xn_minus_delta(F, 1, F->one());
    ASSERT_EQ(fac.size(), 1U);
    EXPECT_EQ(fac.factors[0], P(F, {1, 1}));
}

TEST(Factor, XFourMinusTwoOverF3MatchesTrialDivision) {
    auto F = Field::create(3, 1);
    auto fac = factor_xn_minus_delta(F, 4, F->element(2));
    auto expected = trial_division_factor(xn_minus(F, 4, F->element(2)));
    std::sort(expected.begin(), expected.end(), canonical_less);
    EXPECT_EQ(fac.factors, expected);
    ASSERT_EQ(fac.size(), 2U);
    EXPECT_EQ(fac.factors[0], P(F, {2, 1, 1}));
    EXPECT_EQ(fac.factors[1], P(F, {2, 2, 1}));
}

TEST(Factor, Errors) {
    auto F3 = Field::create(3, 1);
    try {
        factor_xn_minus_delta(F3, 6, F3->one());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotCoprime);
    }
    try {
        factor_xn_minus_delta(F3, 4, F3->zero());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
    }
}

TEST(Factor, IrreducibilityAgreesWithBruteForce) {
    for (auto [p, m, dmax] : {std::tuple{2, 1, 6}, std::tuple{3, 1, 4}, std::tuple{2, 2, 3}}) {
        auto F = Field::create(p, m);
        for (std::size_t d = 1; d <= static_cast<std::size_t>(dmax); ++d) {
            for (const auto& f : all_monic(F, d)) {
                EXPECT_EQ(is_irreducible(f), trial_division_factor(f).size() == 1) << p << "^" << m << " deg " << d;
            }
        }
    }
}

class FactorProperties : public ::testing::TestWithParam<std::tuple<int, int, int>> {};

TEST_P(FactorProperties, ProductDistinctIrreducibleCanonical) {
    const auto [p, m, nmax] = GetParam();
    auto F = Field::create(p, m);
    std::mt19937_64 rng(17);
    for (int n = 1; n <= nmax; ++n) {
        if (n % p == 0) continue;
        const FieldElement delta = random_unit(*F, rng);
        auto fac = factor_xn_minus_delta(F, n, delta, rng());
        EXPECT_EQ(fac.product(), xn_minus(F, n, delta));
        std::size_t total = 0;
        for (std::size_t i = 0; i < fac.size(); ++i) {
            EXPECT_TRUE(fac.factors[i].is_monic());
            EXPECT_TRUE(is_irreducible(fac.factors[i]));
            total += fac.factors[i].degree();
            for (std::size_t j = i + 1; j < fac.size(); ++j) {
                EXPECT_TRUE(gcd(fac.factors[i], fac.factors[j]).is_one());
                EXPECT_TRUE(canonical_less(fac.factors[i], fac.factors[j]));
            }
        }
        EXPECT_EQ(total, static_cast<std::size_t>(n));
    }
}

INSTANTIATE_TEST_SUITE_P(Small, FactorProperties,
                         ::testing::Values(std::tuple{2, 1, 35}, std::tuple{3, 1, 26}, std::tuple{2, 2, 21},
                                           std::tuple{2, 3, 15}, std::tuple{5, 1, 24}, std::tuple{3, 2, 10}));

TEST(Factor, SeedDoesNotChangeOutput) {
    auto F = Field::create(2, 2);
    const auto base = factor_xn_minus_delta(F, 21, F->one(), 1).factors;
    for (std::uint64_t seed : {std::uint64_t{2}, std::uint64_t{99}, kDefaultSeed}) {
        EXPECT_EQ(factor_xn_minus_delta(F, 21, F->one(), seed).factors, base);
    }
}

}  // namespace
}  // namespace chaincodes
